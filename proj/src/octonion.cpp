#include "rloop/octonion.hpp"

namespace rloop {

namespace {

// Products e_i * e_j as signed unit indices; 0 means the real unit.
constexpr int kTable[7][7] = {
    {0, -5, -6, -7, 2, 3, 4},   // e1
    {5, 0, -7, 6, -1, -4, 3},   // e2
    {6, 7, 0, -5, 4, -1, -2},   // e3
    {7, -6, 5, 0, -3, 2, -1},   // e4
    {-2, 1, -4, 3, 0, 7, -6},   // e5
    {-3, 4, 1, -2, -7, 0, 5},   // e6
    {-4, -3, 2, 1, 6, -5, 0},   // e7
};

}  // namespace

const std::array<std::array<OctoUnit, 7>, 7>& octonionTable() {
  static const auto table = [] {
    std::array<std::array<OctoUnit, 7>, 7> t{};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        int v = kTable[i][j];
        t[i][j] = v == 0 ? OctoUnit{-1, 0} : OctoUnit{v > 0 ? 1 : -1, v > 0 ? v : -v};
      }
    return t;
  }();
  return table;
}

Octonion8 Octonion8::fromIm(const VectorC& v) {
  Octonion8 o;
  for (int i = 0; i < 7; ++i) o.c[i + 1] = v[i];
  return o;
}

VectorC Octonion8::im() const { return VectorC(c.begin() + 1, c.end()); }

Octonion8 Octonion8::conj() const {
  Octonion8 o = *this;
  for (int i = 1; i < 8; ++i) o.c[i] = -o.c[i];
  return o;
}

Octonion8 operator*(const Octonion8& x, const Octonion8& y) {
  const auto& tab = octonionTable();
  Octonion8 out;
  for (int i = 0; i < 8; ++i) {
    if (x.c[i].isZero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (y.c[j].isZero()) continue;
      GR term = x.c[i] * y.c[j];
      if (i == 0) {
        out.c[j] += term;
      } else if (j == 0) {
        out.c[i] += term;
      } else {
        const OctoUnit& u = tab[i - 1][j - 1];
        if (u.sign < 0)
          out.c[u.unit] -= term;
        else
          out.c[u.unit] += term;
      }
    }
  }
  return out;
}

MatrixC leftMulMatrix(const VectorC& x) {
  std::vector<VectorC> cols;
  for (int j = 0; j < 7; ++j) cols.push_back(mul_im7(x, unitVec(7, j)));
  return MatrixC::fromColumns(cols, 7);
}

bool productsVanish(const Subspace& a, const Subspace& b) {
  for (const auto& x : a.vectors())
    for (const auto& y : b.vectors())
      if (!isZeroVec(mul_im7(x, y))) return false;
  return true;
}

Subspace associative_extension(const Subspace& e) {
  if (e.ambient() != 7 || e.dim() != 2) throw DegeneratePlane("expected a 2-plane in C^7");
  if (!(e.conj() == e)) throw DegeneratePlane("plane is not real");
  // The canonical echelon basis of a conjugation-invariant subspace is real.
  VectorC x = e.vec(0), y = e.vec(1);
  Subspace plus = e + Subspace::span({mul_im7(x, y)}, 7);
  if (plus.dim() != 3) throw DegeneratePlane("x.y lies in the plane");
  return plus;
}

CoassocReport coassoc_classify(const Subspace& c) {
  CoassocReport r;
  if (c.ambient() != 7 || c.dim() != 2) return r;
  if (!isIsotropic(c, FormContext::bilinear(7))) return r;
  if (!productsVanish(c, c)) return r;
  r.complexCoassociative = true;
  r.associativePart = (c + c.conj()).hermitianComplement();
  return r;
}

Subspace multiplier_plane(const Subspace& l) {
  if (l.ambient() != 7 || l.dim() != 1) throw DimensionMismatch("multiplier_plane expects a line in C^7");
  VectorC v = l.vec(0);
  // v in (L + conj L)^perp  <=>  conj(v)^T x = 0 and v^T x = 0.
  MatrixC rows(9, 7);
  VectorC cv = conjVec(v);
  for (int j = 0; j < 7; ++j) {
    rows(0, j) = cv[j];
    rows(1, j) = v[j];
  }
  rows.setBlock(2, 0, leftMulMatrix(v));
  Subspace b = Subspace::span(nullspace(rows), 7);
  if (b.dim() != 2) throw RankSurprise("multiplier plane has dimension " + std::to_string(b.dim()));
  return b;
}

int so7CoordIndex(int i, int j) {
  // index of (i,j), i<j, in lexicographic order over a 7x7 upper triangle
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += 6 - a;
  return idx + (j - i - 1);
}

std::vector<GR> so7Coords(const MatrixC& x) {
  std::vector<GR> c(21);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) c[so7CoordIndex(i, j)] = x(i, j);
  return c;
}

MatrixC so7FromCoords(const std::vector<GR>& coords, int n) {
  MatrixC x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      x(i, j) = coords[so7CoordIndex(i, j)];
      x(j, i) = -x(i, j);
    }
  return x;
}

const MatrixC& g2RelationMatrix() {
  static const MatrixC rel = [] {
    struct Term {
      int coef, i, j;  // 1-based
    };
    const std::vector<std::vector<Term>> relations = {
        {{1, 6, 7}, {-1, 1, 2}, {-1, 3, 4}},
        {{1, 7, 5}, {-1, 1, 3}, {-1, 4, 2}},
        {{1, 5, 6}, {-1, 1, 4}, {-1, 2, 3}},
        {{1, 5, 1}, {1, 6, 4}, {-1, 7, 3}},
        {{1, 5, 2}, {1, 6, 3}, {1, 7, 4}},
        {{1, 5, 3}, {-1, 6, 2}, {1, 7, 1}},
        {{1, 5, 4}, {-1, 6, 1}, {-1, 7, 2}},
    };
    MatrixC m(7, 21);
    for (int r = 0; r < 7; ++r)
      for (const Term& t : relations[r]) {
        int i = t.i - 1, j = t.j - 1, sign = t.coef;
        if (i > j) {
          std::swap(i, j);
          sign = -sign;
        }
        m(r, so7CoordIndex(i, j)) += GR(sign);
      }
    return m;
  }();
  return rel;
}

bool g2_lie_relations(const MatrixC& x) {
  if (x.rows() != 7 || x.cols() != 7) return false;
  if (!(x.transpose() == -x)) return false;
  return isZeroVec(g2RelationMatrix() * so7Coords(x));
}

MatrixC nu(const MatrixC& a) {
  if (a.rows() != 4 || a.cols() != 4 || !(a.transpose() == -a)) throw DimensionMismatch("nu expects A in so(4)");
  // Unknowns: the three coordinates of the lower-right so(3) block.
  const int idx[3] = {so7CoordIndex(4, 5), so7CoordIndex(4, 6), so7CoordIndex(5, 6)};
  std::vector<GR> known(21);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) known[so7CoordIndex(i, j)] = a(i, j);
  const MatrixC& rel = g2RelationMatrix();
  MatrixC lhs(7, 3);
  VectorC rhs = rel * known;
  for (int r = 0; r < 7; ++r) {
    rhs[r] = -rhs[r];
    for (int k = 0; k < 3; ++k) lhs(r, k) = rel(r, idx[k]);
  }
  auto sol = solve(lhs, rhs);
  if (!sol) throw AlgorithmError("nu: relations inconsistent");
  MatrixC out(3, 3);
  out(0, 1) = (*sol)[0];
  out(0, 2) = (*sol)[1];
  out(1, 2) = (*sol)[2];
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) out(j, i) = -out(i, j);
  return out;
}

bool g2_group_check(const MatrixC& m) {
  if (m.rows() != 7 || m.cols() != 7) return false;
  if (!(m.transpose() * m == MatrixC::identity(7))) return false;
  if (!(det(m) == GR(1))) return false;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (!(m * mul_im7(unitVec(7, i), unitVec(7, j)) == mul_im7(m.column(i), m.column(j)))) return false;
  return true;
}

const WeightFrame& weightFrame() {
  static const WeightFrame f = [] {
    WeightFrame w;
    w.H1 = MatrixC(7, 7);
    w.H1(0, 1) = GR(-1);
    w.H1(1, 0) = GR(1);
    w.H1(2, 3) = GR(1);
    w.H1(3, 2) = GR(-1);
    w.H2 = MatrixC(7, 7);
    w.H2(0, 1) = GR(-1);
    w.H2(1, 0) = GR(1);
    w.H2(2, 3) = GR(-1);
    w.H2(3, 2) = GR(1);
    w.H2(5, 6) = GR(-2);
    w.H2(6, 5) = GR(2);
    const GR i = GR::I();
    auto vec = [](std::initializer_list<std::pair<int, GR>> entries) {
      VectorC v(7);
      for (const auto& [k, x] : entries) v[k - 1] = x;
      return v;
    };
    w.L1 = Subspace::span({vec({{1, GR(1)}, {2, i}})}, 7);
    w.L2 = Subspace::span({vec({{3, GR(1)}, {4, -i}})}, 7);
    w.L3 = Subspace::span({vec({{6, GR(1)}, {7, -i}})}, 7);
    w.L0 = Subspace::span({unitVec(7, 4)}, 7);
    return w;
  }();
  return f;
}

MatrixC g2TwistS() {
  std::vector<GR> d(7, GR(1));
  for (int k = 0; k < 4; ++k) d[k] = GR(-1);
  return MatrixC::diagonal(d);
}

}  // namespace rloop
