#pragma once

// The affine algebra g2 x| C^7 as 8x8 matrices (C -B^T X; B nu(C) Y; 0 0 0),
// its involutions and the flat-connection family for constant data v.

#include <string>
#include <utility>
#include <vector>

#include "rloop/formsla.hpp"

namespace rloop {

struct AffineG2Element {
  MatrixC m;  // 8x8

  // nu(C) is filled in from C.
  static AffineG2Element fromBlocks(const MatrixC& c, const MatrixC& b, const VectorC& x, const VectorC& y);
  static AffineG2Element zero() { return {MatrixC(8, 8)}; }

  MatrixC C() const { return m.block(0, 0, 4, 4); }
  MatrixC B() const { return m.block(4, 0, 3, 4); }
  VectorC X() const { return m.block(0, 7, 4, 1).column(0); }
  VectorC Y() const { return m.block(4, 7, 3, 1).column(0); }
  friend bool operator==(const AffineG2Element& a, const AffineG2Element& b) { return a.m == b.m; }
};

// Empty when valid, otherwise the violated invariant.
std::string affineViolation(const MatrixC& m);
bool isAffineG2(const MatrixC& m);
bool inPhat(const AffineG2Element& x);  // sigma-hat eigenvalue -1
bool inKhat(const AffineG2Element& x);  // sigma-hat eigenvalue +1

// Basis of the 21-dimensional algebra: 14 for g2, then the 7 translations.
std::vector<AffineG2Element> affineBasis();

AffineG2Element affine_bracket(const AffineG2Element& a, const AffineG2Element& b);

// (tau-hat xi, sigma-hat xi) = (conj xi, S xi S) with S = diag(-I4, I3, 1).
std::pair<AffineG2Element, AffineG2Element> hat_involutions(const AffineG2Element& xi);
MatrixC affineS();

struct TorusData {
  MatrixC a1, a2;  // 3x4
  AffineG2Element b1, b2;
};

// Built once; [b1, b2] = 0 is asserted.
const TorusData& torus();
AffineG2Element embedP(const MatrixC& a);  // a -> (0 -a^T 0; a 0 0; 0 0 0)

struct AbelianData {
  GR p1, p2, p3, q1, q2, q3, r1, r2, r3;
};

// B(p, q) as printed has -(p2 + q3) in row 2, column 3 and is then in p only
// when p1 = p2. correctedEntry uses -(p1 + q3), which lies in p and gives the
// so(4) components the same derivation lists (alpha_43 = q3 ds + (2 q3 + p1) dt).
MatrixC abelianB(const AbelianData& d, bool correctedEntry = false);
VectorC abelianX(const AbelianData& d);
AffineG2Element v_from_pqr(const AbelianData& d, bool correctedEntry = false);

// Curvature of sum_i (lambda b_i + [b_i, v]) dx_i for constant v:
// [lambda b1 + [b1,v], lambda b2 + [b2,v]].
AffineG2Element theta_curvature(const AffineG2Element& v, const GR& lambda);

struct CurvatureCoefficients {
  MatrixC c2, c1, c0;  // coefficients of lambda^2, lambda, 1
};
CurvatureCoefficients curvature_coefficients(const AffineG2Element& v);
bool is_flat(const AffineG2Element& v);

}  // namespace rloop
