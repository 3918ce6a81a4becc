#pragma once

// Complexified octonions and the G2 plane constructions on C^7 = Im(O) (x) C.

#include <array>
#include <vector>

#include "rloop/formsla.hpp"

namespace rloop {

// e_i * e_j = sign * e_unit, where unit 0 stands for the real unit 1.
struct OctoUnit {
  int sign;
  int unit;
};

// Row i, column j (both 1-based in the usual naming, 0-based here).
const std::array<std::array<OctoUnit, 7>, 7>& octonionTable();

struct Octonion8 {
  std::array<GR, 8> c{};  // (1, e1, ..., e7)

  static Octonion8 fromIm(const VectorC& v);
  VectorC im() const;
  Octonion8 conj() const;
  friend Octonion8 operator*(const Octonion8& x, const Octonion8& y);
  friend bool operator==(const Octonion8& a, const Octonion8& b) { return a.c == b.c; }
};

// Imaginary part of the octonion product of two vectors in C^7, for any
// commutative ring of scalars T supporting += and *.
template <class T>
std::vector<T> im7Product(const std::vector<T>& x, const std::vector<T>& y) {
  const auto& tab = octonionTable();
  std::vector<T> out(7);
  for (int i = 0; i < 7; ++i) {
    if (x[i].isZero()) continue;
    for (int j = 0; j < 7; ++j) {
      if (i == j || y[j].isZero()) continue;
      const OctoUnit& u = tab[i][j];
      T term = x[i] * y[j];
      if (u.sign < 0)
        out[u.unit - 1] -= term;
      else
        out[u.unit - 1] += term;
    }
  }
  return out;
}

inline VectorC mul_im7(const VectorC& x, const VectorC& y) { return im7Product(x, y); }

// Matrix of y -> x . y
MatrixC leftMulMatrix(const VectorC& x);

bool productsVanish(const Subspace& a, const Subspace& b);

Subspace associative_extension(const Subspace& e);

struct CoassocReport {
  bool complexCoassociative = false;
  Subspace associativePart;
};

CoassocReport coassoc_classify(const Subspace& c);

Subspace multiplier_plane(const Subspace& l);

// Coefficient rows of the seven linear relations cutting g2 out of so(7),
// in the coordinates X_ij (i < j) ordered lexicographically.
const MatrixC& g2RelationMatrix();
int so7CoordIndex(int i, int j);  // 0-based i < j
std::vector<GR> so7Coords(const MatrixC& x);
MatrixC so7FromCoords(const std::vector<GR>& coords, int n = 7);

bool g2_lie_relations(const MatrixC& x);
MatrixC nu(const MatrixC& a);
bool g2_group_check(const MatrixC& m);

struct WeightFrame {
  MatrixC H1, H2;
  Subspace L0, L1, L2, L3;
};

const WeightFrame& weightFrame();

// diag(-I4, I3)
MatrixC g2TwistS();

}  // namespace rloop
