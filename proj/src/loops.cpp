#include "rloop/loops.hpp"

#include "rloop/octonion.hpp"

#include <algorithm>
#include <sstream>

namespace rloop {

MatrixLoop MatrixLoop::identity(int n) {
  MatrixLoop g(n);
  for (int i = 0; i < n; ++i) g(i, i) = RF(1);
  return g;
}

MatrixLoop MatrixLoop::constant(const MatrixC& m) {
  if (!m.isSquare()) throw DimensionMismatch("loop from non-square matrix");
  MatrixLoop g(m.rows());
  for (int i = 0; i < g.n_; ++i)
    for (int j = 0; j < g.n_; ++j) g(i, j) = RF(m(i, j));
  return g;
}

MatrixLoop MatrixLoop::weighted(const std::vector<std::pair<RF, MatrixC>>& terms, int n) {
  MatrixLoop g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RF acc;
      for (const auto& [f, p] : terms)
        if (!p(i, j).isZero()) acc += f * p(i, j);
      g(i, j) = std::move(acc);
    }
  return g;
}

MatrixC MatrixLoop::eval(const GR& x) const {
  MatrixC m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).eval(x);
  return m;
}

bool MatrixLoop::finiteAtInfinity() const {
  return std::all_of(e_.begin(), e_.end(), [](const RF& f) { return f.finiteAtInfinity(); });
}

MatrixC MatrixLoop::evalInfinity() const {
  MatrixC m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).evalInfinity();
  return m;
}

bool MatrixLoop::isIdentity() const { return *this == identity(n_); }

MatrixLoop MatrixLoop::transpose() const {
  MatrixLoop t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatrixLoop MatrixLoop::conjCoeff() const {
  MatrixLoop t(n_);
  for (size_t k = 0; k < e_.size(); ++k) t.e_[k] = e_[k].conjCoeff();
  return t;
}

MatrixLoop MatrixLoop::negateArgument() const {
  MatrixLoop t(n_);
  for (size_t k = 0; k < e_.size(); ++k) t.e_[k] = e_[k].negateArgument();
  return t;
}

VectorC MatrixLoop::columnAt(int j, const GR& x) const {
  VectorC v(n_);
  for (int i = 0; i < n_; ++i) v[i] = (*this)(i, j).eval(x);
  return v;
}

std::vector<GR> MatrixLoop::poles() const {
  std::vector<GR> out;
  for (const auto& f : e_)
    for (const auto& d : f.den()) out.push_back(d.root);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int MatrixLoop::poleOrder(const GR& a) const {
  int k = 0;
  for (const auto& f : e_) k = std::max(k, f.poleOrder(a));
  return k;
}

MatrixLoop operator*(const MatrixLoop& a, const MatrixLoop& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("loop product");
  const int n = a.n_;
  MatrixLoop m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RF acc;
      for (int k = 0; k < n; ++k) {
        const RF& x = a(i, k);
        const RF& y = b(k, j);
        if (x.isZero() || y.isZero()) continue;
        acc += x * y;
      }
      m(i, j) = std::move(acc);
    }
  return m;
}

MatrixLoop operator*(const MatrixC& a, const MatrixLoop& b) {
  if (a.cols() != b.n_ || !a.isSquare()) throw DimensionMismatch("matrix-loop product");
  const int n = b.n_;
  MatrixLoop m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RF acc;
      for (int k = 0; k < n; ++k)
        if (!a(i, k).isZero() && !b(k, j).isZero()) acc += b(k, j) * a(i, k);
      m(i, j) = std::move(acc);
    }
  return m;
}

MatrixLoop operator*(const MatrixLoop& a, const MatrixC& b) {
  if (b.rows() != a.n_ || !b.isSquare()) throw DimensionMismatch("loop-matrix product");
  const int n = a.n_;
  MatrixLoop m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RF acc;
      for (int k = 0; k < n; ++k)
        if (!b(k, j).isZero() && !a(i, k).isZero()) acc += a(i, k) * b(k, j);
      m(i, j) = std::move(acc);
    }
  return m;
}

MatrixLoop operator*(const RF& f, const MatrixLoop& b) {
  MatrixLoop m = b;
  for (auto& x : m.e_) x = f * x;
  return m;
}

MatrixLoop operator+(const MatrixLoop& a, const MatrixLoop& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("loop sum");
  MatrixLoop m = a;
  for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += b.e_[k];
  return m;
}

MatrixLoop operator-(const MatrixLoop& a, const MatrixLoop& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("loop difference");
  MatrixLoop m = a;
  for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] -= b.e_[k];
  return m;
}

std::string MatrixLoop::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) os << (j ? " | " : "") << (*this)(i, j).str();
    os << "\n";
  }
  return os.str();
}

namespace {

// Determinants of all (rows x S) minors, S a column subset of size |rows|,
// built one row at a time by cofactor expansion along the last row.
std::vector<RF> minorTable(const MatrixLoop& a, const std::vector<int>& rows) {
  const int n = a.n();
  std::vector<RF> d(size_t(1) << n);
  d[0] = RF(1);
  std::vector<std::vector<unsigned>> bySize(n + 1);
  for (unsigned s = 0; s < (1u << n); ++s) bySize[__builtin_popcount(s)].push_back(s);
  for (size_t r = 0; r < rows.size(); ++r) {
    for (unsigned s : bySize[r + 1]) {
      RF acc;
      int pos = 0;  // position of column j among the members of s
      for (int j = 0; j < n; ++j) {
        if (!(s & (1u << j))) continue;
        const RF& x = a(rows[r], j);
        const RF& sub = d[s & ~(1u << j)];
        if (!x.isZero() && !sub.isZero()) {
          RF t = x * sub;
          // Expanding along the last of r+1 rows: sign (-1)^(r + pos).
          if ((r + pos) % 2)
            acc -= t;
          else
            acc += t;
        }
        ++pos;
      }
      d[s] = std::move(acc);
    }
  }
  return d;
}

std::vector<GR> rootHints(const MatrixLoop& a) {
  std::vector<GR> hints;
  for (const auto& p : a.poles()) {
    hints.push_back(p);
    hints.push_back(p.conj());
    hints.push_back(-p);
    hints.push_back(-p.conj());
  }
  return hints;
}

}  // namespace

RF loop_det(const MatrixLoop& a) {
  const int n = a.n();
  if (n == 0) return RF(1);
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  return minorTable(a, rows)[(size_t(1) << n) - 1];
}

MatrixLoop loop_inv(const MatrixLoop& a) {
  const int n = a.n();
  const unsigned full = (1u << n) - 1;
  MatrixLoop adj(n);
  RF det;
  for (int i = 0; i < n; ++i) {
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    auto d = minorTable(a, rows);
    for (int j = 0; j < n; ++j) {
      RF c = d[full & ~(1u << j)];
      if ((i + j) % 2) c = -c;
      adj(j, i) = c;
      if (i == 0 && !a(0, j).isZero()) det += a(0, j) * c;
    }
  }
  if (det.isZero()) throw SingularLoop("determinant vanishes identically");
  return det.reciprocal(rootHints(a)) * adj;
}

// ----------------------------------------------------------------- contexts

GroupContext GroupContext::fromTag(const std::string& tag, int n) {
  if (tag == "gl") return gl(n);
  if (tag == "so") return so(n);
  if (tag == "csp") return csp(n);
  if (tag == "g2") {
    if (n != 7) throw DimensionMismatch("g2 acts on C^7");
    return g2();
  }
  throw InvalidSpec("unknown group tag '" + tag + "'");
}

FormContext GroupContext::form() const {
  switch (kind) {
    case GroupKind::GL:
      return FormContext::hermitian(n);
    case GroupKind::CSp:
      return FormContext::symplectic(n);
    default:
      return FormContext::bilinear(n);
  }
}

std::string GroupContext::tag() const {
  switch (kind) {
    case GroupKind::GL:
      return "gl";
    case GroupKind::SO:
      return "so";
    case GroupKind::CSp:
      return "csp";
    case GroupKind::G2:
      return "g2";
  }
  return "";
}

TwistContext TwistContext::soGrassmannian(int n, int k) {
  if (k < 0 || k > n) throw DimensionMismatch("Grassmannian index out of range");
  std::vector<GR> d(n, GR(-1));
  for (int i = 0; i < k; ++i) d[i] = GR(1);
  return {TwistFlavor::SOGrassmannian, n, k, MatrixC::diagonal(d)};
}

TwistContext TwistContext::soU(int m) { return {TwistFlavor::SOU, 2 * m, 0, symplecticJ(m)}; }

TwistContext TwistContext::g2SO4() {
  std::vector<GR> d(7, GR(1));
  for (int i = 0; i < 4; ++i) d[i] = GR(-1);
  return {TwistFlavor::G2SO4, 7, 0, MatrixC::diagonal(d)};
}

TwistContext TwistContext::cspU(int n) { return {TwistFlavor::CSpU, n, 0, symplecticJ(n)}; }

TwistContext TwistContext::fromTag(const std::string& tag, int n) {
  const std::string grass = "so-grassmannian:";
  if (tag.rfind(grass, 0) == 0) return soGrassmannian(n, std::stoi(tag.substr(grass.size())));
  if (tag == "so-u") {
    if (n % 2) throw DimensionMismatch("SO(n)/U(n/2) needs even n");
    return soU(n / 2);
  }
  if (tag == "g2-so4") return g2SO4();
  if (tag == "csp-u") return cspU(n);
  throw InvalidSpec("unknown twist tag '" + tag + "'");
}

GroupContext TwistContext::group() const {
  switch (flavor) {
    case TwistFlavor::G2SO4:
      return GroupContext::g2();
    case TwistFlavor::CSpU:
      return GroupContext::csp(n);
    default:
      return GroupContext::so(n);
  }
}

std::string TwistContext::tag() const {
  switch (flavor) {
    case TwistFlavor::SOGrassmannian:
      return "so-grassmannian:" + std::to_string(k);
    case TwistFlavor::SOU:
      return "so-u";
    case TwistFlavor::G2SO4:
      return "g2-so4";
    case TwistFlavor::CSpU:
      return "csp-u";
  }
  return "";
}

GR TwistContext::partner(const GR& alpha) const {
  return flavor == TwistFlavor::CSpU ? -alpha.conj() : -alpha;
}

MatrixLoop TwistContext::apply(const MatrixLoop& g, const RF* multiplier) const {
  MatrixLoop h = s * g.negateArgument() * inverse(s);
  if (flavor != TwistFlavor::CSpU) return h;
  std::optional<RF> c;
  if (!multiplier) {
    c = cspMultiplier(g);
    if (!c) throw NotAMember("twist of a loop that is not conformally symplectic");
    multiplier = &*c;
  }
  RF cm = multiplier->negateArgument();
  return cm.reciprocal(rootHints(g)) * h;
}

// ------------------------------------------------------------------ Laurent

LaurentResult laurent_at(const MatrixLoop& g, const GR& alpha, int depth) {
  MoebiusChart chart(alpha);
  const int n = g.n();
  const int k = g.poleOrder(alpha);
  LaurentResult r;
  r.expansion.alpha = alpha;
  r.expansion.jLo = -k;
  r.expansion.coeffs.assign(depth + 1, MatrixC(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RF& f = g(i, j);
      if (f.isZero()) continue;
      auto c = moebius_laurent(f, chart, -k, -k + depth);
      for (int t = 0; t <= depth; ++t) r.expansion.coeffs[t](i, j) = c[t];
    }
  r.degree = {k, rank(r.expansion.coeffs[0])};
  return r;
}

TotalDegree total_degree(const MatrixLoop& g, const GR& alpha) { return laurent_at(g, alpha, 0).degree; }

// --------------------------------------------------------------- membership

std::optional<RF> cspMultiplier(const MatrixLoop& g) {
  const int dim = g.n();
  if (dim % 2) return std::nullopt;
  const int m = dim / 2;
  MatrixLoop w = g.transpose() * symplecticJ(m) * g;
  RF c = w(0, m);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      RF expect;
      if (j == i + m) expect = c;
      if (i == j + m) expect = -c;
      if (!(w(i, j) == expect)) return std::nullopt;
    }
  return c;
}

MembershipReport membership(const MatrixLoop& g, const GroupContext& ctx) {
  MembershipReport r;
  if (g.n() != ctx.dim()) {
    r.violation = "loop size " + std::to_string(g.n()) + " does not match group dimension " +
                  std::to_string(ctx.dim());
    return r;
  }
  switch (ctx.kind) {
    case GroupKind::GL:
      if (loop_det(g).isZero()) {
        r.violation = "det g vanishes identically";
        return r;
      }
      break;
    case GroupKind::SO:
    case GroupKind::G2: {
      if (!(g.transpose() * g == MatrixLoop::identity(g.n()))) {
        r.violation = "transpose(g) g != Id";
        return r;
      }
      // det^2 = 1 identically, so det is a constant; one regular point decides it.
      GR x(0);
      auto poles = g.poles();
      while (std::find(poles.begin(), poles.end(), x) != poles.end()) x += GR(1);
      if (!(det(g.eval(x)) == GR(1))) {
        r.violation = "det g != 1";
        return r;
      }
      if (ctx.kind == GroupKind::G2) {
        std::vector<std::vector<RF>> cols(7, std::vector<RF>(7));
        for (int i = 0; i < 7; ++i)
          for (int j = 0; j < 7; ++j) cols[j][i] = g(i, j);
        for (int i = 0; i < 7; ++i)
          for (int j = i + 1; j < 7; ++j) {
            VectorC prod = mul_im7(unitVec(7, i), unitVec(7, j));
            std::vector<RF> lhs(7);
            for (int a = 0; a < 7; ++a)
              for (int b = 0; b < 7; ++b)
                if (!prod[b].isZero()) lhs[a] += g(a, b) * prod[b];
            if (!(lhs == im7Product(cols[i], cols[j]))) {
              r.violation = "g(e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + ") != g(e" +
                            std::to_string(i + 1) + ") g(e" + std::to_string(j + 1) + ")";
              return r;
            }
          }
      }
      break;
    }
    case GroupKind::CSp: {
      auto c = cspMultiplier(g);
      if (!c || c->isZero()) {
        r.violation = "transpose(g) J g is not a nonzero scalar multiple of J";
        return r;
      }
      r.multiplier = std::move(c);
      break;
    }
  }
  r.member = true;
  return r;
}

bool isNormalized(const MatrixLoop& g) { return g.finiteAtInfinity() && g.evalInfinity() == MatrixC::identity(g.n()); }

bool isReal(const MatrixLoop& g, const GroupContext& ctx) {
  if (ctx.conjugationReality()) return g.conjCoeff() == g;
  return g.conjCoeff().transpose() * g == MatrixLoop::identity(g.n());
}

bool isTwisted(const MatrixLoop& g, const TwistContext& twist) { return twist.apply(g) == g; }

SymmetryReport symmetry_check(const MatrixLoop& g, const GroupContext& ctx, const TwistContext* twist) {
  SymmetryReport r;
  r.normalized = isNormalized(g);
  r.real = isReal(g, ctx);
  if (twist) r.twisted = isTwisted(g, *twist);
  return r;
}

std::vector<PoleEntry> pole_spectrum(const MatrixLoop& g) {
  std::vector<PoleEntry> upper, lower;
  for (const auto& p : g.poles()) {
    if (p.isReal()) throw InvalidRealPole("real pole at " + p.str());
    PoleEntry e{p, total_degree(g, p)};
    (sgn(p.im()) > 0 ? upper : lower).push_back(std::move(e));
  }
  upper.insert(upper.end(), lower.begin(), lower.end());
  return upper;
}

MatrixLoop groupInverse(const MatrixLoop& g, const GroupContext& ctx) {
  switch (ctx.kind) {
    case GroupKind::SO:
    case GroupKind::G2:
      return g.transpose();
    case GroupKind::CSp: {
      auto c = cspMultiplier(g);
      if (!c) throw NotAMember("not conformally symplectic");
      MatrixC j = symplecticJ(ctx.n);
      return c->reciprocal(rootHints(g)) * (inverse(j) * g.transpose() * j);
    }
    case GroupKind::GL:
      break;
  }
  return loop_inv(g);
}

}  // namespace rloop
