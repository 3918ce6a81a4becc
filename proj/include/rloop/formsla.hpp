#pragma once

// Exact linear algebra over Q(i)^n: matrices, canonical subspaces, the
// hermitian / symmetric bilinear / symplectic forms and the subspace
// constructions used by the factorization algorithms.

#include <optional>
#include <string>
#include <vector>

#include "rloop/exactnum.hpp"

namespace rloop {

using VectorC = std::vector<GR>;

VectorC conjVec(const VectorC& v);
VectorC scaleVec(const VectorC& v, const GR& s);
VectorC addVec(const VectorC& a, const VectorC& b);
VectorC subVec(const VectorC& a, const VectorC& b);
bool isZeroVec(const VectorC& v);
VectorC unitVec(int n, int i);

class MatrixC {
 public:
  MatrixC() = default;
  MatrixC(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static MatrixC identity(int n);
  static MatrixC fromColumns(const std::vector<VectorC>& cols, int n);
  static MatrixC fromRows(const std::vector<std::vector<GR>>& rows);
  static MatrixC diagonal(const std::vector<GR>& d);

  int rows() const { return r_; }
  int cols() const { return c_; }
  GR& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const GR& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  VectorC column(int j) const;
  VectorC row(int i) const;
  MatrixC block(int r0, int c0, int nr, int nc) const;
  void setBlock(int r0, int c0, const MatrixC& b);

  MatrixC transpose() const;
  MatrixC conj() const;
  MatrixC adjoint() const;  // conjugate transpose
  bool isZero() const;
  bool isSquare() const { return r_ == c_; }

  friend MatrixC operator+(const MatrixC& a, const MatrixC& b);
  friend MatrixC operator-(const MatrixC& a, const MatrixC& b);
  friend MatrixC operator*(const MatrixC& a, const MatrixC& b);
  friend MatrixC operator*(const GR& s, const MatrixC& a);
  friend VectorC operator*(const MatrixC& a, const VectorC& v);
  MatrixC operator-() const;
  friend bool operator==(const MatrixC& a, const MatrixC& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  std::string str() const;

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<GR> a_;
};

MatrixC commutator(const MatrixC& a, const MatrixC& b);

// Reduced row echelon form; pivot columns returned through `pivots`.
MatrixC rref(const MatrixC& m, std::vector<int>* pivots = nullptr);
int rank(const MatrixC& m);
std::vector<VectorC> nullspace(const MatrixC& m);
MatrixC inverse(const MatrixC& m);
GR det(const MatrixC& m);
// Particular solution of A x = b with free variables set to zero.
std::optional<VectorC> solve(const MatrixC& a, const VectorC& b);

// Span stored as an n x dim basis in reduced column echelon form; the basis
// is the canonical representative, so equality of subspaces is equality of
// bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int n) : n_(n), basis_(n, 0) {}
  static Subspace span(const std::vector<VectorC>& vectors, int n);
  static Subspace columnSpace(const MatrixC& m);
  static Subspace whole(int n);

  int ambient() const { return n_; }
  int dim() const { return basis_.cols(); }
  const MatrixC& basis() const { return basis_; }
  VectorC vec(int j) const { return basis_.column(j); }
  std::vector<VectorC> vectors() const;
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const VectorC& v) const;
  bool contains(const Subspace& w) const;
  Subspace conj() const;
  Subspace image(const MatrixC& m) const;
  Subspace hermitianComplement() const;
  Subspace bilinearComplement() const;
  Subspace intersect(const Subspace& o) const;
  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

  std::string str() const;

 private:
  int n_ = 0;
  MatrixC basis_;
  std::vector<int> pivots_;
};

inline Subspace subspace_from(const std::vector<VectorC>& vectors, int n) { return Subspace::span(vectors, n); }

enum class FormKind { Hermitian, SymmetricBilinear, Symplectic };

// J = (0 I; -I 0) of size 2m.
MatrixC symplecticJ(int m);

struct FormContext {
  FormKind kind = FormKind::SymmetricBilinear;
  int n = 0;
  MatrixC J;  // symplectic only

  static FormContext hermitian(int n) { return {FormKind::Hermitian, n, {}}; }
  static FormContext bilinear(int n) { return {FormKind::SymmetricBilinear, n, {}}; }
  static FormContext symplectic(int m) { return {FormKind::Symplectic, 2 * m, symplecticJ(m)}; }

  GR operator()(const VectorC& v, const VectorC& w) const;
};

GR hermitianForm(const VectorC& v, const VectorC& w);
GR bilinearForm(const VectorC& v, const VectorC& w);

MatrixC hermitian_projection(const Subspace& w);

struct IsotropyReport {
  bool isotropic = false;
  bool lagrangian = false;
  bool real = false;
};

IsotropyReport isotropic_classify(const Subspace& w, const FormContext& form);
bool isIsotropic(const Subspace& w, const FormContext& form);

enum class LagrangianFlavor { Any, Real };

Subspace extend_to_lagrangian(const Subspace& v, const FormContext& form, LagrangianFlavor flavor);

// A line L in V with s * conj(L) = L.
Subspace antilinear_fixed_line(const Subspace& v, const MatrixC& s);

}  // namespace rloop
