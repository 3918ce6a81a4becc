#pragma once

// Matrix loops g(lambda) with rational entries, the group and twist contexts,
// Laurent data at a pole and the membership / symmetry predicates.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rloop/formsla.hpp"

namespace rloop {

class MatrixLoop {
 public:
  MatrixLoop() = default;
  explicit MatrixLoop(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
  static MatrixLoop identity(int n);
  static MatrixLoop constant(const MatrixC& m);
  // sum_k f_k * P_k
  static MatrixLoop weighted(const std::vector<std::pair<RF, MatrixC>>& terms, int n);

  int n() const { return n_; }
  RF& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const RF& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<RF>& entries() const { return e_; }

  MatrixC eval(const GR& x) const;
  bool finiteAtInfinity() const;
  MatrixC evalInfinity() const;
  bool isIdentity() const;

  MatrixLoop transpose() const;
  MatrixLoop conjCoeff() const;
  MatrixLoop negateArgument() const;  // g(-lambda)
  VectorC columnAt(int j, const GR& x) const;

  // Distinct denominator roots, canonical order.
  std::vector<GR> poles() const;
  int poleOrder(const GR& a) const;

  friend MatrixLoop operator*(const MatrixLoop& a, const MatrixLoop& b);
  friend MatrixLoop operator*(const MatrixC& a, const MatrixLoop& b);
  friend MatrixLoop operator*(const MatrixLoop& a, const MatrixC& b);
  friend MatrixLoop operator*(const RF& f, const MatrixLoop& b);
  friend MatrixLoop operator+(const MatrixLoop& a, const MatrixLoop& b);
  friend MatrixLoop operator-(const MatrixLoop& a, const MatrixLoop& b);
  friend bool operator==(const MatrixLoop& a, const MatrixLoop& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

  std::string str() const;

 private:
  int n_ = 0;
  std::vector<RF> e_;
};

inline MatrixLoop loop_mul(const MatrixLoop& a, const MatrixLoop& b) { return a * b; }
RF loop_det(const MatrixLoop& a);
// Adjugate over determinant; throws SingularLoop when det vanishes identically.
MatrixLoop loop_inv(const MatrixLoop& a);

enum class GroupKind { GL, SO, CSp, G2 };

struct GroupContext {
  GroupKind kind = GroupKind::GL;
  int n = 0;  // GL/SO: matrix size; CSp: half the ambient size; G2: 7

  static GroupContext gl(int n) { return {GroupKind::GL, n}; }
  static GroupContext so(int n) { return {GroupKind::SO, n}; }
  static GroupContext csp(int n) { return {GroupKind::CSp, n}; }
  static GroupContext g2() { return {GroupKind::G2, 7}; }
  static GroupContext fromTag(const std::string& tag, int n);

  int dim() const { return kind == GroupKind::CSp ? 2 * n : n; }
  FormContext form() const;
  std::string tag() const;
  // Reality is coefficientwise conjugation (SO, G2) rather than *g^-1 (GL, CSp).
  bool conjugationReality() const { return kind == GroupKind::SO || kind == GroupKind::G2; }
};

enum class TwistFlavor { SOGrassmannian, SOU, G2SO4, CSpU };

struct TwistContext {
  TwistFlavor flavor = TwistFlavor::SOGrassmannian;
  int n = 0;  // SO: matrix size; CSp: half size
  int k = 0;  // Grassmannian only
  MatrixC s;  // J for SOU and CSpU

  static TwistContext soGrassmannian(int n, int k);
  static TwistContext soU(int m);
  static TwistContext g2SO4();
  static TwistContext cspU(int n);
  static TwistContext fromTag(const std::string& tag, int n);

  GroupContext group() const;
  std::string tag() const;
  // The pole whose factor sigma maps a factor at alpha to.
  GR partner(const GR& alpha) const;
  // sigma(g(-lambda)); CSp needs the multiplier of g.
  MatrixLoop apply(const MatrixLoop& g, const RF* multiplier = nullptr) const;
  // Action on subspaces: s W for SO/G2, J W for CSp.
  Subspace act(const Subspace& w) const { return w.image(s); }
};

struct TotalDegree {
  int k = 0;
  int rank = 0;
  friend auto operator<=>(const TotalDegree&, const TotalDegree&) = default;
  std::string str() const { return "(" + std::to_string(k) + "," + std::to_string(rank) + ")"; }
};

struct LaurentExpansion {
  GR alpha;
  int jLo = 0;
  std::vector<MatrixC> coeffs;  // coeffs[j - jLo]

  const MatrixC& at(int j) const { return coeffs.at(static_cast<size_t>(j - jLo)); }
  int jHi() const { return jLo + static_cast<int>(coeffs.size()) - 1; }
};

struct LaurentResult {
  LaurentExpansion expansion;
  TotalDegree degree;
};

// Window [-k, -k + depth] in the chart mu = (lambda - alpha)/(lambda - conj alpha).
LaurentResult laurent_at(const MatrixLoop& g, const GR& alpha, int depth);
TotalDegree total_degree(const MatrixLoop& g, const GR& alpha);

struct MembershipReport {
  bool member = false;
  std::optional<RF> multiplier;  // CSp
  std::string violation;
};

MembershipReport membership(const MatrixLoop& g, const GroupContext& ctx);
// Scalar c with g^T J g = c J, or nullopt if g is not conformally symplectic.
std::optional<RF> cspMultiplier(const MatrixLoop& g);

struct SymmetryReport {
  bool normalized = false;
  bool real = false;
  bool twisted = false;
};

SymmetryReport symmetry_check(const MatrixLoop& g, const GroupContext& ctx, const TwistContext* twist = nullptr);
bool isNormalized(const MatrixLoop& g);
bool isReal(const MatrixLoop& g, const GroupContext& ctx);
bool isTwisted(const MatrixLoop& g, const TwistContext& twist);

struct PoleEntry {
  GR alpha;
  TotalDegree degree;
};

// Poles with k >= 1, upper half-plane representatives first.
std::vector<PoleEntry> pole_spectrum(const MatrixLoop& g);

// Inverse using the group structure: transpose for SO/G2, c^-1 J^-1 g^T J for CSp.
MatrixLoop groupInverse(const MatrixLoop& g, const GroupContext& ctx);

}  // namespace rloop
