#include "rloop/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>

namespace rloop {

// ---------------------------------------------------------------- scalars

GaussianRational GaussianRational::fromInts(long p, long q, long r, long s) {
  if (q == 0 || s == 0) throw DivisionByZero("zero denominator");
  Rational a(p, q), b(r, s);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

GaussianRational GaussianRational::inverse() const {
  Rational n = normSq();
  if (sgn(n) == 0) throw DivisionByZero("inverse of zero");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (sgn(a.im_) == 0) {
    if (sgn(b.im_) == 0) return GaussianRational(Rational(a.re_ * b.re_));
    return {a.re_ * b.re_, a.re_ * b.im_};
  }
  if (sgn(b.im_) == 0) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) { return *this = *this * o; }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw DivisionByZero("division by zero");
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this = *this * o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string GaussianRational::str() const {
  if (isZero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) != 0) {
    std::string ip;
    if (im_ == 1)
      ip = "i";
    else if (im_ == -1)
      ip = "-i";
    else
      ip = im_.get_str() + "*i";
    if (!out.empty() && ip[0] != '-') out += '+';
    out += ip;
  }
  return out;
}

namespace {

bool readDigits(std::string_view s, size_t& pos, std::string& out) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  out.assign(s.substr(start, pos - start));
  return pos > start;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty scalar");
  size_t pos = 0;
  bool haveRe = false, haveIm = false;
  Rational re, im;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected sign between scalar terms in '" + std::string(s) + "'", 1,
                       static_cast<int>(pos) + 1);
    }
    first = false;
    Rational value(1);
    bool imaginary = false;
    if (pos < s.size() && s[pos] == 'i') {
      imaginary = true;
      ++pos;
    } else {
      std::string num, den;
      if (!readDigits(s, pos, num))
        throw ParseError("expected digits in scalar '" + std::string(s) + "'", 1, static_cast<int>(pos) + 1);
      mpz_class n(num), d(1);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!readDigits(s, pos, den))
          throw ParseError("expected denominator in scalar '" + std::string(s) + "'", 1,
                           static_cast<int>(pos) + 1);
        d = mpz_class(den);
        if (d == 0)
          throw ParseError("zero denominator in scalar '" + std::string(s) + "'", 1, static_cast<int>(pos));
      }
      value = Rational(n, d);
      value.canonicalize();
      if (s.substr(pos, 2) == "*i") {
        imaginary = true;
        pos += 2;
      } else if (pos < s.size() && s[pos] == 'i') {
        imaginary = true;
        ++pos;
      }
    }
    if (sign < 0) value = -value;
    if (imaginary) {
      if (haveIm) throw ParseError("duplicate imaginary part in '" + std::string(s) + "'");
      haveIm = true;
      im = value;
    } else {
      if (haveRe) throw ParseError("duplicate real part in '" + std::string(s) + "'");
      haveRe = true;
      re = value;
    }
  }
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

// ------------------------------------------------------------- polynomials

Polynomial::Polynomial(std::vector<GR> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

Polynomial Polynomial::constant(const GR& c) { return Polynomial(std::vector<GR>{c}); }

Polynomial Polynomial::linear(const GR& root) { return Polynomial(std::vector<GR>{-root, GR(1)}); }

Polynomial Polynomial::fromRoots(const std::vector<std::pair<GR, int>>& roots) {
  Polynomial p = constant(GR(1));
  for (const auto& [r, m] : roots)
    for (int k = 0; k < m; ++k) p = p.mulLinear(r);
  return p;
}

GR Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return GR();
  return c_[i];
}

GR Polynomial::eval(const GR& x) const {
  GR acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::conjCoeff() const {
  Polynomial out;
  out.c_.reserve(c_.size());
  for (const auto& c : c_) out.c_.push_back(c.conj());
  return out;
}

std::pair<Polynomial, GR> Polynomial::divLinear(const GR& r) const {
  if (c_.empty()) return {Polynomial(), GR()};
  std::vector<GR> q(c_.size() - 1);
  GR carry;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 1; --i) {
    carry = c_[i] + carry * r;
    q[i - 1] = carry;
  }
  GR rem = c_[0] + carry * r;
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::mulLinear(const GR& r) const {
  if (c_.empty()) return {};
  std::vector<GR> out(c_.size() + 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    out[i + 1] += c_[i];
    out[i] -= c_[i] * r;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const GR& s) const {
  if (s.isZero()) return {};
  Polynomial out;
  out.c_.reserve(c_.size());
  for (const auto& c : c_) out.c_.push_back(c * s);
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<GR> out(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<GR> out(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<GR> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].isZero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

// ------------------------------------------------------------ root search

namespace {

struct GaussInt {
  mpz_class re, im;
};

// All Gaussian integers d (up to nothing; all associates included) dividing z.
std::vector<GaussInt> gaussianDivisors(const GaussInt& z) {
  mpz_class n = z.re * z.re + z.im * z.im;
  if (n > mpz_class("10000000000"))
    throw NonSplittingDenominator("coefficients too large for exhaustive root search");
  std::vector<mpz_class> divs;
  for (mpz_class m = 1; m * m <= n; ++m) {
    if (n % m == 0) {
      divs.push_back(m);
      if (m * m != n) divs.push_back(n / m);
    }
  }
  std::vector<GaussInt> out;
  for (const auto& m : divs) {
    mpz_class x = 0;
    while (x * x <= m) {
      mpz_class y2 = m - x * x;
      mpz_class y = sqrt(y2);
      if (y * y == y2) {
        for (int sx : {1, -1})
          for (int sy : {1, -1}) {
            if ((x == 0 && sx < 0) || (y == 0 && sy < 0)) continue;
            GaussInt d{x * sx, y * sy};
            // d | z  iff  z * conj(d) divisible by N(d) = m in both parts.
            mpz_class pr = z.re * d.re + z.im * d.im;
            mpz_class pi = z.im * d.re - z.re * d.im;
            if (pr % m == 0 && pi % m == 0) out.push_back(d);
          }
      }
      ++x;
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<GR, int>> splitOverGaussianRationals(const Polynomial& p, const std::vector<GR>& hints) {
  if (p.isZero()) throw NonSplittingDenominator("zero polynomial has no factorization");
  std::vector<std::pair<GR, int>> roots;
  Polynomial q = p;
  auto extract = [&](const GR& r) {
    int m = 0;
    while (q.degree() >= 1 && q.eval(r).isZero()) {
      q = q.divLinear(r).first;
      ++m;
    }
    if (m > 0) roots.emplace_back(r, m);
  };
  for (const auto& h : hints) extract(h);
  extract(GR());
  if (q.degree() >= 1) {
    // Clear denominators to get Gaussian-integer coefficients.
    mpz_class l = 1;
    for (const auto& c : q.coeffs()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    auto toInt = [&](const GR& c) {
      Rational a = c.re() * l, b = c.im() * l;
      return GaussInt{a.get_num(), b.get_num()};
    };
    auto num = gaussianDivisors(toInt(q.coeffs().front()));
    auto den = gaussianDivisors(toInt(q.lead()));
    std::set<GR> tried;
    for (const auto& a : num) {
      for (const auto& b : den) {
        if (q.degree() < 1) break;
        GR r = GR(Rational(a.re), Rational(a.im)) / GR(Rational(b.re), Rational(b.im));
        if (!tried.insert(r).second) continue;
        extract(r);
      }
    }
  }
  if (q.degree() >= 1)
    throw NonSplittingDenominator("polynomial of degree " + std::to_string(p.degree()) +
                                  " does not split over Q(i)");
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return roots;
}

// ------------------------------------------------------ rational functions

RationalFunction::RationalFunction(const GR& c) {
  if (!c.isZero()) {
    numer_ = Polynomial::constant(GR(1));
    scale_ = c;
  }
}

namespace {

// Cheap filter for root tests: a polynomial whose image in F_p does not vanish
// at the image of r has no root at r. p = 1 mod 4 so that i lives in F_p.
// Values are kept as unreduced fractions to avoid modular inverses.
constexpr std::uint64_t kPrime = 2147483629ULL;
constexpr std::uint64_t kSqrtMinusOne = 629208553ULL;

struct ModFrac {
  std::uint64_t num, den;
};

std::optional<ModFrac> modOf(const GR& z) {
  std::uint64_t rn = mpz_fdiv_ui(z.re().get_num_mpz_t(), kPrime), rd = mpz_fdiv_ui(z.re().get_den_mpz_t(), kPrime);
  std::uint64_t in = mpz_fdiv_ui(z.im().get_num_mpz_t(), kPrime), id = mpz_fdiv_ui(z.im().get_den_mpz_t(), kPrime);
  if (rd == 0 || id == 0) return std::nullopt;
  return ModFrac{(rn * id % kPrime + in * rd % kPrime * kSqrtMinusOne) % kPrime, rd * id % kPrime};
}

bool mayVanishAt(const Polynomial& p, const GR& r) {
  auto x = modOf(r);
  if (!x) return true;
  ModFrac acc{0, 1};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    auto ci = modOf(*it);
    if (!ci) return true;
    // acc * x + ci
    std::uint64_t an = acc.num * x->num % kPrime, ad = acc.den * x->den % kPrime;
    acc = {(an * ci->den + ci->num * ad) % kPrime, ad * ci->den % kPrime};
  }
  return acc.num == 0;
}

}  // namespace

RationalFunction RationalFunction::make(Polynomial numer, std::vector<DenFactor> den, const GR& scale) {
  RationalFunction f;
  if (scale.isZero() || numer.isZero()) return f;
  GR lead = numer.lead();
  f.scale_ = scale * lead;
  if (!(lead == GR(1))) numer = numer.scaled(lead.inverse());
  std::sort(den.begin(), den.end(), [](const DenFactor& a, const DenFactor& b) { return a.root < b.root; });
  std::vector<DenFactor> merged;
  for (auto& d : den) {
    if (d.mult < 0) throw std::invalid_argument("negative denominator multiplicity");
    if (d.mult == 0) continue;
    if (!merged.empty() && merged.back().root == d.root)
      merged.back().mult += d.mult;
    else
      merged.push_back(std::move(d));
  }
  std::vector<DenFactor> kept;
  for (auto& d : merged) {
    while (d.mult > 0 && numer.degree() >= 1 && mayVanishAt(numer, d.root)) {
      auto [quot, rem] = numer.divLinear(d.root);
      if (!rem.isZero()) break;
      numer = std::move(quot);
      --d.mult;
    }
    if (d.mult > 0) kept.push_back(std::move(d));
  }
  f.numer_ = std::move(numer);
  f.den_ = std::move(kept);
  return f;
}

RationalFunction RationalFunction::lambda() { return make(Polynomial::linear(GR()), {}); }

RationalFunction RationalFunction::mobius(const GR& a, const GR& b) {
  return make(Polynomial::linear(a), {DenFactor{b, 1}});
}

int RationalFunction::denDegree() const {
  int d = 0;
  for (const auto& f : den_) d += f.mult;
  return d;
}

GR RationalFunction::constantValue() const {
  if (!isConstant()) throw std::logic_error("constantValue on non-constant function");
  return scale_;
}

GR RationalFunction::eval(const GR& x) const {
  if (isZero()) {
    for (const auto& d : den_)
      if (d.root == x) throw EvalAtPole("evaluation at a pole");
    return GR();
  }
  GR denom(1);
  for (const auto& d : den_) {
    GR t = x - d.root;
    if (t.isZero()) throw EvalAtPole("evaluation at pole " + d.root.str());
    for (int k = 0; k < d.mult; ++k) denom *= t;
  }
  return scale_ * numer_.eval(x) / denom;
}

bool RationalFunction::finiteAtInfinity() const { return isZero() || numer_.degree() <= denDegree(); }

GR RationalFunction::evalInfinity() const {
  if (isZero()) return GR();
  int d = denDegree();
  if (numer_.degree() < d) return GR();
  if (numer_.degree() == d) return scale_;
  throw EvalAtPole("pole at infinity");
}

int RationalFunction::poleOrder(const GR& a) const {
  for (const auto& d : den_)
    if (d.root == a) return d.mult;
  return 0;
}

int RationalFunction::zeroOrder(const GR& a) const {
  if (isZero()) throw std::logic_error("zero order of the zero function");
  int m = 0;
  Polynomial q = numer_;
  while (q.degree() >= 1) {
    auto [quot, rem] = q.divLinear(a);
    if (!rem.isZero()) break;
    q = std::move(quot);
    ++m;
  }
  return m;
}

RationalFunction RationalFunction::conjCoeff() const {
  RationalFunction f;
  if (isZero()) return f;
  f.numer_ = numer_.conjCoeff();
  f.scale_ = scale_.conj();
  f.den_.reserve(den_.size());
  for (const auto& d : den_) f.den_.push_back({d.root.conj(), d.mult});
  std::sort(f.den_.begin(), f.den_.end(), [](const DenFactor& a, const DenFactor& b) { return a.root < b.root; });
  return f;
}

RationalFunction RationalFunction::negateArgument() const {
  if (isZero()) return {};
  std::vector<GR> c = numer_.coeffs();
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  std::vector<DenFactor> den;
  den.reserve(den_.size());
  for (const auto& d : den_) den.push_back({-d.root, d.mult});
  GR s = (denDegree() % 2 == 0) ? scale_ : -scale_;
  return make(Polynomial(std::move(c)), std::move(den), s);
}

RationalFunction RationalFunction::reciprocal(const std::vector<GR>& hints) const {
  if (isZero()) throw DivisionByZero("reciprocal of the zero function");
  auto roots = splitOverGaussianRationals(numer_, hints);
  std::vector<DenFactor> den;
  for (auto& [r, m] : roots) den.push_back({r, m});
  Polynomial num = Polynomial::constant(GR(1));
  for (const auto& d : den_)
    for (int k = 0; k < d.mult; ++k) num = num.mulLinear(d.root);
  return make(std::move(num), std::move(den), scale_.inverse());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.scale_ = -f.scale_;
  return f;
}

namespace {

std::vector<DenFactor> mergeDen(const std::vector<DenFactor>& a, const std::vector<DenFactor>& b, bool add) {
  std::vector<DenFactor> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].root < b[j].root)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].root < a[i].root) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].root, add ? a[i].mult + b[j].mult : std::max(a[i].mult, b[j].mult)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial liftTo(const Polynomial& p, const std::vector<DenFactor>& have, const std::vector<DenFactor>& target) {
  Polynomial out = p;
  size_t i = 0;
  for (const auto& t : target) {
    int m = 0;
    while (i < have.size() && have[i].root < t.root) ++i;
    if (i < have.size() && have[i].root == t.root) m = have[i].mult;
    for (int k = m; k < t.mult; ++k) out = out.mulLinear(t.root);
  }
  return out;
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (a.den_ == b.den_) {
    return RationalFunction::make(a.numer_.scaled(a.scale_) + b.numer_.scaled(b.scale_), a.den_);
  }
  auto den = mergeDen(a.den_, b.den_, false);
  Polynomial n = liftTo(a.numer_, a.den_, den).scaled(a.scale_) + liftTo(b.numer_, b.den_, den).scaled(b.scale_);
  return RationalFunction::make(std::move(n), std::move(den));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero() || b.isZero()) return {};
  if (b.isConstant()) return a * b.scale_;
  if (a.isConstant()) return b * a.scale_;
  return RationalFunction::make(a.numer_ * b.numer_, mergeDen(a.den_, b.den_, true), a.scale_ * b.scale_);
}

RationalFunction operator*(const RationalFunction& a, const GR& s) {
  if (a.isZero() || s.isZero()) return {};
  RationalFunction f = a;
  f.scale_ *= s;
  return f;
}

std::string RationalFunction::str() const {
  if (isZero()) return "0";
  std::string out = "(" + scale_.str() + ")*[";
  const auto& c = numer_.coeffs();
  for (size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + c[i].str();
  out += "]";
  for (const auto& d : den_) out += "/(l-(" + d.root.str() + "))^" + std::to_string(d.mult);
  return out;
}

RationalFunction rf_normalize(const Polynomial& numer, const Polynomial& denom) {
  if (denom.isZero()) throw DivisionByZero("zero denominator polynomial");
  auto roots = splitOverGaussianRationals(denom);
  std::vector<DenFactor> den;
  for (auto& [r, m] : roots) den.push_back({r, m});
  return RationalFunction::make(numer, std::move(den), denom.lead().inverse());
}

// ---------------------------------------------------------- Moebius chart

MoebiusChart::MoebiusChart(const GR& alpha) : alpha_(alpha) {
  if (alpha.isReal()) throw ValidationError("Moebius chart needs a non-real point, got " + alpha.str());
}

GR MoebiusChart::lambdaAt(const GR& mu) const {
  if (mu == GR(1)) throw EvalAtPole("mu = 1 corresponds to lambda = infinity");
  return (alpha_ - alpha_.conj() * mu) / (GR(1) - mu);
}

GR MoebiusChart::muAt(const GR& lambda) const { return (lambda - alpha_) / (lambda - alpha_.conj()); }

namespace {

using Series = std::vector<GR>;

Series mulTrunc(const Series& x, const Series& y, size_t len) {
  Series out(len);
  for (size_t i = 0; i < x.size() && i < len; ++i) {
    if (x[i].isZero()) continue;
    for (size_t j = 0; j < y.size() && i + j < len; ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

}  // namespace

std::vector<GR> moebius_laurent(const RationalFunction& f, const MoebiusChart& chart, int jLo, int jHi) {
  if (jLo > jHi) throw std::invalid_argument("moebius_laurent: empty window");
  std::vector<GR> out(jHi - jLo + 1);
  if (f.isZero()) return out;
  const GR& a = chart.alpha();
  const GR ab = a.conj();
  const int p = f.poleOrder(a);
  const int top = jHi + p;
  if (top < 0) return out;
  const size_t len = static_cast<size_t>(top) + 1;

  // B^D * N(A/B) with A = a - ab*mu, B = 1 - mu, by Horner.
  const auto& N = f.numer().coeffs();
  const int D = f.numer().degree();
  const Series A = {a, -ab};
  const Series oneMinusMu = {GR(1), GR(-1)};
  Series t = {N[D]};
  Series Bpow = {GR(1)};
  for (int d = D - 1; d >= 0; --d) {
    Bpow = mulTrunc(Bpow, oneMinusMu, len);
    t = mulTrunc(t, A, len);
    t.resize(len);
    for (size_t i = 0; i < len && i < Bpow.size(); ++i) t[i] += N[d] * Bpow[i];
  }
  t.resize(len);

  // Remaining power of (1 - mu): M - D.
  const int e = f.denDegree() - D;
  if (e >= 0) {
    for (int k = 0; k < e; ++k) t = mulTrunc(t, oneMinusMu, len);
  } else {
    for (int k = 0; k < -e; ++k)
      for (size_t i = 1; i < len; ++i) t[i] += t[i - 1];
  }

  GR factor = f.scale();
  if (p > 0) {
    GR d = (a - ab).inverse();
    for (int k = 0; k < p; ++k) factor *= d;
  }
  for (auto& c : t) c *= factor;

  for (const auto& df : f.den()) {
    if (df.root == a) continue;
    const GR c0inv = (a - df.root).inverse();
    const GR c1 = df.root - ab;
    for (int k = 0; k < df.mult; ++k) {
      t[0] *= c0inv;
      for (size_t i = 1; i < len; ++i) {
        t[i] -= c1 * t[i - 1];
        t[i] *= c0inv;
      }
    }
  }

  for (int j = jLo; j <= jHi; ++j)
    if (j + p >= 0) out[j - jLo] = t[j + p];
  return out;
}

}  // namespace rloop
