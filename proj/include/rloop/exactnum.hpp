#pragma once

// Exact scalars (Gaussian rationals), univariate polynomials and rational
// functions in lambda, and Laurent expansion in the Moebius chart
// mu = (lambda - alpha) / (lambda - conj(alpha)).

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rloop/errors.hpp"

namespace rloop {

using Rational = mpq_class;

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}
  GaussianRational(long v) : re_(v) {}
  GaussianRational(const Rational& re) : re_(re) {}
  GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  static GaussianRational I() { return {Rational(0), Rational(1)}; }
  // p/q + (r/s) i with canonicalization.
  static GaussianRational fromInts(long p, long q, long r = 0, long s = 1);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }
  bool isImaginary() const { return sgn(re_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational normSq() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im).
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

  // "a/b+c/d*i" with zero parts omitted; unit imaginary parts print as "i", "-i".
  std::string str() const;
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

using GR = GaussianRational;

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// Dense polynomial in lambda, ascending coefficients, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GR> coeffs);
  static Polynomial constant(const GR& c);
  static Polynomial linear(const GR& root);  // lambda - root
  static Polynomial fromRoots(const std::vector<std::pair<GR, int>>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  const std::vector<GR>& coeffs() const { return c_; }
  GR coeff(int i) const;
  const GR& lead() const { return c_.back(); }

  GR eval(const GR& x) const;
  Polynomial conjCoeff() const;
  // Quotient and remainder of division by (lambda - r).
  std::pair<Polynomial, GR> divLinear(const GR& r) const;
  Polynomial mulLinear(const GR& r) const;  // times (lambda - r)
  Polynomial scaled(const GR& s) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<GR> c_;
};

// All roots of p in Q(i), with multiplicity, sorted. `hints` are tested first;
// the remainder is handled by exhaustive rational-root search over Z[i].
// Throws NonSplittingDenominator if a factor without Q(i) roots remains.
std::vector<std::pair<GR, int>> splitOverGaussianRationals(const Polynomial& p,
                                                           const std::vector<GR>& hints = {});

struct DenFactor {
  GR root;
  int mult;
  friend bool operator==(const DenFactor& a, const DenFactor& b) {
    return a.root == b.root && a.mult == b.mult;
  }
};

// scale * numer(lambda) / prod (lambda - root)^mult, numer monic and coprime
// to the denominator; factors sorted by root. The zero function has scale 0.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const GR& c);
  RationalFunction(int c) : RationalFunction(GR(c)) {}

  static RationalFunction make(Polynomial numer, std::vector<DenFactor> den, const GR& scale = GR(1));
  static RationalFunction lambda();
  // (lambda - a) / (lambda - b)
  static RationalFunction mobius(const GR& a, const GR& b);

  const Polynomial& numer() const { return numer_; }
  const std::vector<DenFactor>& den() const { return den_; }
  const GR& scale() const { return scale_; }
  int denDegree() const;

  bool isZero() const { return scale_.isZero(); }
  bool isPolynomial() const { return den_.empty(); }
  bool isConstant() const { return den_.empty() && numer_.degree() <= 0; }
  GR constantValue() const;  // requires isConstant()

  GR eval(const GR& x) const;
  bool finiteAtInfinity() const;
  GR evalInfinity() const;
  int poleOrder(const GR& a) const;
  int zeroOrder(const GR& a) const;

  RationalFunction conjCoeff() const;
  // f(-lambda)
  RationalFunction negateArgument() const;
  // 1/f; hints are candidate zeros of the numerator.
  RationalFunction reciprocal(const std::vector<GR>& hints = {}) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const GR& s);
  friend RationalFunction operator*(const GR& s, const RationalFunction& a) { return a * s; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.scale_ == b.scale_ && a.den_ == b.den_ && a.numer_ == b.numer_;
  }

  std::string str() const;

 private:
  Polynomial numer_;
  std::vector<DenFactor> den_;
  GR scale_;
};

using RF = RationalFunction;

// numer/denom in canonical form; denom must split over Q(i).
RationalFunction rf_normalize(const Polynomial& numer, const Polynomial& denom);

class MoebiusChart {
 public:
  explicit MoebiusChart(const GR& alpha);
  const GR& alpha() const { return alpha_; }
  RationalFunction mu() const { return RationalFunction::mobius(alpha_, alpha_.conj()); }
  // lambda for a finite mu != 1
  GR lambdaAt(const GR& mu) const;
  GR muAt(const GR& lambda) const;

 private:
  GR alpha_;
};

// Coefficients c_j, j in [jLo, jHi], of f(lambda(mu)) = sum c_j mu^j at mu = 0.
std::vector<GR> moebius_laurent(const RationalFunction& f, const MoebiusChart& chart, int jLo, int jHi);

inline int pole_order(const RationalFunction& f, const GR& a) { return f.poleOrder(a); }

}  // namespace rloop
