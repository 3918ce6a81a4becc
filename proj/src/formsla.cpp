#include "rloop/formsla.hpp"

#include <sstream>

namespace rloop {

VectorC conjVec(const VectorC& v) {
  VectorC out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

VectorC scaleVec(const VectorC& v, const GR& s) {
  VectorC out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x * s);
  return out;
}

VectorC addVec(const VectorC& a, const VectorC& b) {
  VectorC out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

VectorC subVec(const VectorC& a, const VectorC& b) {
  VectorC out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

bool isZeroVec(const VectorC& v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

VectorC unitVec(int n, int i) {
  VectorC v(n);
  v[i] = GR(1);
  return v;
}

// ------------------------------------------------------------------ matrix

MatrixC MatrixC::identity(int n) {
  MatrixC m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = GR(1);
  return m;
}

MatrixC MatrixC::fromColumns(const std::vector<VectorC>& cols, int n) {
  MatrixC m(n, static_cast<int>(cols.size()));
  for (int j = 0; j < m.c_; ++j)
    for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

MatrixC MatrixC::fromRows(const std::vector<std::vector<GR>>& rows) {
  if (rows.empty()) return {};
  MatrixC m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.r_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.c_) throw DimensionMismatch("ragged matrix rows");
    for (int j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MatrixC MatrixC::diagonal(const std::vector<GR>& d) {
  int n = static_cast<int>(d.size());
  MatrixC m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

VectorC MatrixC::column(int j) const {
  VectorC v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

VectorC MatrixC::row(int i) const {
  VectorC v(c_);
  for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
  return v;
}

MatrixC MatrixC::block(int r0, int c0, int nr, int nc) const {
  MatrixC b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void MatrixC::setBlock(int r0, int c0, const MatrixC& b) {
  for (int i = 0; i < b.r_; ++i)
    for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

MatrixC MatrixC::transpose() const {
  MatrixC t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MatrixC MatrixC::conj() const {
  MatrixC t = *this;
  for (auto& x : t.a_) x = x.conj();
  return t;
}

MatrixC MatrixC::adjoint() const {
  MatrixC t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

bool MatrixC::isZero() const {
  for (const auto& x : a_)
    if (!x.isZero()) return false;
  return true;
}

MatrixC operator+(const MatrixC& a, const MatrixC& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sum");
  MatrixC m = a;
  for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
  return m;
}

MatrixC operator-(const MatrixC& a, const MatrixC& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix difference");
  MatrixC m = a;
  for (size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
  return m;
}

MatrixC operator*(const MatrixC& a, const MatrixC& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("matrix product");
  MatrixC m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const GR& x = a(i, k);
      if (x.isZero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const GR& y = b(k, j);
        if (!y.isZero()) m(i, j) += x * y;
      }
    }
  return m;
}

MatrixC operator*(const GR& s, const MatrixC& a) {
  MatrixC m = a;
  for (auto& x : m.a_) x *= s;
  return m;
}

VectorC operator*(const MatrixC& a, const VectorC& v) {
  if (a.c_ != static_cast<int>(v.size())) throw DimensionMismatch("matrix-vector product");
  VectorC out(a.r_);
  for (int i = 0; i < a.r_; ++i)
    for (int j = 0; j < a.c_; ++j)
      if (!a(i, j).isZero() && !v[j].isZero()) out[i] += a(i, j) * v[j];
  return out;
}

MatrixC MatrixC::operator-() const {
  MatrixC m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

std::string MatrixC::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

MatrixC commutator(const MatrixC& a, const MatrixC& b) { return a * b - b * a; }

MatrixC rref(const MatrixC& m, std::vector<int>* pivots) {
  MatrixC a = m;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).isZero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    GR inv = a(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).isZero()) continue;
      GR f = a(i, c);
      for (int j = c; j < a.cols(); ++j)
        if (!a(r, j).isZero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

int rank(const MatrixC& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

std::vector<VectorC> nullspace(const MatrixC& m) {
  std::vector<int> piv;
  MatrixC r = rref(m, &piv);
  std::vector<bool> isPivot(m.cols(), false);
  for (int p : piv) isPivot[p] = true;
  std::vector<VectorC> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    VectorC v(m.cols());
    v[f] = GR(1);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(static_cast<int>(k), f);
    out.push_back(std::move(v));
  }
  return out;
}

MatrixC inverse(const MatrixC& m) {
  if (!m.isSquare()) throw DimensionMismatch("inverse of non-square matrix");
  int n = m.rows();
  MatrixC aug(n, 2 * n);
  aug.setBlock(0, 0, m);
  aug.setBlock(0, n, MatrixC::identity(n));
  std::vector<int> piv;
  MatrixC r = rref(aug, &piv);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  return r.block(0, n, n, n);
}

GR det(const MatrixC& m) {
  if (!m.isSquare()) throw DimensionMismatch("determinant of non-square matrix");
  MatrixC a = m;
  int n = a.rows();
  GR d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).isZero()) {
        p = i;
        break;
      }
    if (p < 0) return GR();
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    GR inv = a(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).isZero()) continue;
      GR f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

std::optional<VectorC> solve(const MatrixC& a, const VectorC& b) {
  int n = a.cols();
  MatrixC aug(a.rows(), n + 1);
  aug.setBlock(0, 0, a);
  for (int i = 0; i < a.rows(); ++i) aug(i, n) = b[i];
  std::vector<int> piv;
  MatrixC r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  VectorC x(n);
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(static_cast<int>(k), n);
  return x;
}

// ---------------------------------------------------------------- subspace

Subspace Subspace::span(const std::vector<VectorC>& vectors, int n) {
  Subspace s(n);
  if (vectors.empty()) return s;
  MatrixC rows(static_cast<int>(vectors.size()), n);
  for (int i = 0; i < rows.rows(); ++i) {
    if (static_cast<int>(vectors[i].size()) != n) throw DimensionMismatch("vector length differs from ambient");
    for (int j = 0; j < n; ++j) rows(i, j) = vectors[i][j];
  }
  std::vector<int> piv;
  MatrixC r = rref(rows, &piv);
  int d = static_cast<int>(piv.size());
  s.basis_ = r.block(0, 0, d, n).transpose();
  s.pivots_ = std::move(piv);
  return s;
}

Subspace Subspace::columnSpace(const MatrixC& m) {
  std::vector<VectorC> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return span(cols, m.rows());
}

Subspace Subspace::whole(int n) {
  std::vector<VectorC> e;
  for (int i = 0; i < n; ++i) e.push_back(unitVec(n, i));
  return span(e, n);
}

std::vector<VectorC> Subspace::vectors() const {
  std::vector<VectorC> out;
  for (int j = 0; j < dim(); ++j) out.push_back(vec(j));
  return out;
}

bool Subspace::contains(const VectorC& v) const {
  if (static_cast<int>(v.size()) != n_) throw DimensionMismatch("vector length differs from ambient");
  // In echelon form the coordinates of v are its entries at the pivots.
  VectorC rebuilt(n_);
  for (int j = 0; j < dim(); ++j) {
    const GR& c = v[pivots_[j]];
    if (c.isZero()) continue;
    for (int i = 0; i < n_; ++i)
      if (!basis_(i, j).isZero()) rebuilt[i] += c * basis_(i, j);
  }
  return rebuilt == v;
}

bool Subspace::contains(const Subspace& w) const {
  for (int j = 0; j < w.dim(); ++j)
    if (!contains(w.vec(j))) return false;
  return true;
}

Subspace Subspace::conj() const {
  Subspace s = *this;
  s.basis_ = basis_.conj();
  return s;
}

Subspace Subspace::image(const MatrixC& m) const {
  std::vector<VectorC> out;
  for (int j = 0; j < dim(); ++j) out.push_back(m * vec(j));
  return span(out, m.rows());
}

Subspace Subspace::hermitianComplement() const {
  if (dim() == 0) return whole(n_);
  return span(nullspace(basis_.adjoint()), n_);
}

Subspace Subspace::bilinearComplement() const {
  if (dim() == 0) return whole(n_);
  return span(nullspace(basis_.transpose()), n_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  return (hermitianComplement() + o.hermitianComplement()).hermitianComplement();
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  auto v = a.vectors();
  for (auto& x : b.vectors()) v.push_back(std::move(x));
  return Subspace::span(v, a.n_);
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "span{";
  for (int j = 0; j < dim(); ++j) {
    os << (j ? ", " : "") << "(";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << basis_(i, j).str();
    os << ")";
  }
  os << "}";
  return os.str();
}

// ------------------------------------------------------------------- forms

MatrixC symplecticJ(int m) {
  MatrixC j(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) {
    j(i, m + i) = GR(1);
    j(m + i, i) = GR(-1);
  }
  return j;
}

GR hermitianForm(const VectorC& v, const VectorC& w) {
  GR s;
  for (size_t i = 0; i < v.size(); ++i) s += v[i].conj() * w[i];
  return s;
}

GR bilinearForm(const VectorC& v, const VectorC& w) {
  GR s;
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

GR FormContext::operator()(const VectorC& v, const VectorC& w) const {
  switch (kind) {
    case FormKind::Hermitian:
      return hermitianForm(v, w);
    case FormKind::SymmetricBilinear:
      return bilinearForm(v, w);
    case FormKind::Symplectic:
      return bilinearForm(v, J * w);
  }
  return GR();
}

MatrixC hermitian_projection(const Subspace& w) {
  int n = w.ambient();
  if (w.dim() == 0) return MatrixC(n, n);
  const MatrixC& b = w.basis();
  MatrixC gram = b.adjoint() * b;
  MatrixC gi;
  try {
    gi = inverse(gram);
  } catch (const SingularMatrix&) {
    throw SingularGram("hermitian Gram matrix is singular");
  }
  return b * gi * b.adjoint();
}

bool isIsotropic(const Subspace& w, const FormContext& form) {
  for (int i = 0; i < w.dim(); ++i)
    for (int j = i; j < w.dim(); ++j)
      if (!form(w.vec(i), w.vec(j)).isZero()) return false;
  return true;
}

IsotropyReport isotropic_classify(const Subspace& w, const FormContext& form) {
  if (form.n != w.ambient()) throw DimensionMismatch("form and subspace ambient dimensions differ");
  if (form.kind == FormKind::Symplectic && w.ambient() % 2 != 0)
    throw DimensionMismatch("symplectic form needs even dimension");
  IsotropyReport r;
  r.isotropic = isIsotropic(w, form);
  r.lagrangian = form.kind == FormKind::Symplectic && r.isotropic && 2 * w.dim() == w.ambient();
  r.real = w.conj() == w;
  return r;
}

Subspace extend_to_lagrangian(const Subspace& v, const FormContext& form, LagrangianFlavor flavor) {
  if (form.kind != FormKind::Symplectic) throw DimensionMismatch("extend_to_lagrangian needs a symplectic form");
  if (form.n != v.ambient()) throw DimensionMismatch("form and subspace ambient dimensions differ");
  if (!isIsotropic(v, form)) throw NotIsotropic("subspace is not isotropic: " + v.str());
  Subspace w = v;
  if (flavor == LagrangianFlavor::Real) {
    w = v + v.conj();
    if (!isIsotropic(w, form)) throw RealExtensionImpossible("V + conj(V) is not isotropic");
  }
  const int m = form.n / 2;
  while (w.dim() < m) {
    // Symplectic complement {x : omega(b, x) = 0 for b in W}.
    MatrixC rows = w.basis().transpose() * form.J;
    Subspace comp = w.dim() == 0 ? Subspace::whole(form.n) : Subspace::span(nullspace(rows), form.n);
    bool grown = false;
    for (int j = 0; j < comp.dim(); ++j) {
      VectorC c = comp.vec(j);
      if (!w.contains(c)) {
        w = w + Subspace::span({c}, form.n);
        grown = true;
        break;
      }
    }
    if (!grown) throw NotIsotropic("symplectic completion stalled");
  }
  return w;
}

Subspace antilinear_fixed_line(const Subspace& v, const MatrixC& s) {
  const int n = v.ambient();
  auto sbar = [&](const VectorC& x) { return s * conjVec(x); };
  std::vector<VectorC> images;
  for (const auto& b : v.vectors()) images.push_back(sbar(b));
  if (!(Subspace::span(images, n) == v)) throw NoFixedLine("subspace is not invariant under v -> s conj(v)");
  for (const auto& b : v.vectors()) {
    VectorC sb = sbar(b);
    for (const VectorC& c : {addVec(b, sb), scaleVec(subVec(b, sb), GR::I())}) {
      if (isZeroVec(c)) continue;
      Subspace line = Subspace::span({c}, n);
      if (Subspace::span({sbar(line.vec(0))}, n) == line) return line;
    }
  }
  throw NoFixedLine("no line fixed by v -> s conj(v)");
}

}  // namespace rloop
