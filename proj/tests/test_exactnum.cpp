#include <gtest/gtest.h>

#include "rloop/exactnum.hpp"
#include "rloop/random.hpp"
#include "testutil.hpp"

using namespace rloop;
using namespace rloop::test;

TEST(GaussianRational, ParseAndPrint) {
  EXPECT_EQ(gr("1/2+3/4*i").str(), "1/2+3/4*i");
  EXPECT_EQ(gr("-i").str(), "-i");
  EXPECT_EQ(gr("2/4").str(), "1/2");
  EXPECT_EQ(gr("0").str(), "0");
  EXPECT_EQ(gr("-3*i"), GR(Rational(0), Rational(-3)));
  EXPECT_THROW(gr("1/0"), ParseError);
  EXPECT_THROW(gr(""), ParseError);
  EXPECT_THROW(gr("1+"), ParseError);
}

TEST(GaussianRational, FieldAxioms) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    GR a = rng.gaussianInt(5) / rng.nonzeroGaussianInt(4), b = rng.gaussianInt(5), c = rng.nonzeroGaussianInt(3);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(c * c.inverse(), GR(1));
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ(a * a.conj(), GR(a.normSq()));
  }
  EXPECT_THROW(GR(0).inverse(), DivisionByZero);
}

TEST(RationalFunction, NormalizeCancels) {
  // (l^2 + 1)/(l + i) = l - i
  RF f = rf_normalize(poly({"1", "0", "1"}), poly({"i", "1"}));
  EXPECT_TRUE(f.isPolynomial());
  EXPECT_EQ(f.numer(), poly({"-i", "1"}));
  EXPECT_EQ(rf_normalize(poly({}), poly({"-3", "1"})), RF());
}

TEST(RationalFunction, NormalizeSplitsDenominator) {
  RF f = rf_normalize(poly({"1"}), poly({"1", "0", "1"}));
  ASSERT_EQ(f.den().size(), 2u);
  // canonical order is lexicographic on (re, im): -i before i
  EXPECT_EQ(f.den()[0], (DenFactor{gr("-i"), 1}));
  EXPECT_EQ(f.den()[1], (DenFactor{gr("i"), 1}));
  // oracle: value agrees with 1/(x^2+1) at sample points
  for (int x = -3; x <= 3; ++x) EXPECT_EQ(f.eval(GR(x)), GR(1) / GR(x * x + 1));
  EXPECT_THROW(rf_normalize(poly({"2"}), poly({"-2", "0", "1"})), NonSplittingDenominator);
}

TEST(RationalFunction, Evaluation) {
  RF f = RF::mobius(gr("i"), gr("-i"));
  EXPECT_EQ(f.eval(GR(0)), GR(-1));  // (-i)/(i)
  EXPECT_EQ(f.evalInfinity(), GR(1));
  EXPECT_EQ(RF(1).eval(gr("5+i")), GR(1));
  EXPECT_THROW(f.eval(gr("-i")), EvalAtPole);
  EXPECT_EQ(RF::make(poly({"1"}), {{gr("i"), 1}}).evalInfinity(), GR(0));
}

TEST(RationalFunction, ConjCoeff) {
  RF f = RF::mobius(gr("i"), gr("-i"));
  EXPECT_EQ(f.conjCoeff(), RF::mobius(gr("-i"), gr("i")));
  RF real = RF::make(poly({"1", "2"}), {{gr("3"), 2}});
  EXPECT_EQ(real.conjCoeff(), real);
  RF il = RF::lambda() * gr("i");
  EXPECT_EQ(il.conjCoeff(), RF::lambda() * gr("-i"));
  EXPECT_EQ(il.conjCoeff().eval(gr("-i")), il.eval(gr("i")).conj());
  EXPECT_EQ(il.conjCoeff().eval(gr("-i")), GR(-1));
}

TEST(RationalFunction, PoleOrder) {
  RF f = RF::make(poly({"1"}), {{gr("i"), 2}});
  EXPECT_EQ(pole_order(f, gr("i")), 2);
  EXPECT_EQ(pole_order(f, gr("2*i")), 0);
  EXPECT_EQ(pole_order(RF::mobius(gr("i"), gr("-i")), gr("-i")), 1);
}

namespace {

RF randomRF(Rng& rng) {
  std::vector<GR> num;
  int deg = static_cast<int>(rng.uniform(0, 2));
  for (int i = 0; i <= deg; ++i) num.push_back(rng.gaussianInt(3));
  std::vector<DenFactor> den;
  for (int i = 0, k = static_cast<int>(rng.uniform(0, 2)); i < k; ++i) den.push_back({rng.gaussianInt(2), static_cast<int>(rng.uniform(1, 2))});
  // merge repeated roots
  std::vector<std::pair<GR, int>> roots;
  for (const auto& d : den) roots.emplace_back(d.root, d.mult);
  return rf_normalize(Polynomial(num), Polynomial::fromRoots(roots));
}

}  // namespace

TEST(RationalFunction, ArithmeticMatchesPointwise) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    RF f = randomRF(rng), g = randomRF(rng);
    for (int s = 0; s < 20; ++s) {
      GR x = GR::fromInts(rng.uniform(-20, 20), rng.uniform(1, 7), rng.uniform(-20, 20), rng.uniform(1, 7));
      if (f.poleOrder(x) || g.poleOrder(x)) continue;
      EXPECT_EQ((f + g).eval(x), f.eval(x) + g.eval(x));
      EXPECT_EQ((f * g).eval(x), f.eval(x) * g.eval(x));
    }
  }
}

TEST(RationalFunction, ConjCoeffIsInvolutiveAndMultiplicative) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    RF f = randomRF(rng), g = randomRF(rng);
    EXPECT_EQ(f.conjCoeff().conjCoeff(), f);
    EXPECT_EQ((f * g).conjCoeff(), f.conjCoeff() * g.conjCoeff());
  }
}

TEST(RationalFunction, PoleOrderOfProduct) {
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    RF f = randomRF(rng), g = randomRF(rng);
    if (f.isZero() || g.isZero()) continue;
    for (const auto& d : f.den()) {
      const GR& a = d.root;
      int bound = f.poleOrder(a) + g.poleOrder(a);
      EXPECT_LE((f * g).poleOrder(a), bound);
      if (f.zeroOrder(a) == 0 && g.zeroOrder(a) == 0 && g.numer().eval(a) != GR(0)) EXPECT_EQ((f * g).poleOrder(a), bound);
    }
  }
}

TEST(MoebiusLaurent, BasicCharts) {
  GR a = gr("1+2*i");
  MoebiusChart chart(a);
  auto mu = moebius_laurent(RF::mobius(a, a.conj()), chart, -2, 3);
  EXPECT_EQ(mu, (std::vector<GR>{0, 0, 0, 1, 0, 0}));
  EXPECT_EQ(moebius_laurent(RF(1), chart, -1, 2), (std::vector<GR>{0, 1, 0, 0}));
  EXPECT_EQ(moebius_laurent(RF::mobius(a.conj(), a), chart, -2, 1), (std::vector<GR>{0, 1, 0, 0}));
  EXPECT_EQ(chart.lambdaAt(chart.muAt(gr("3-i"))), gr("3-i"));
}

TEST(MoebiusLaurent, CauchyProduct) {
  Rng rng(21);
  for (int t = 0; t < 15; ++t) {
    RF f = randomRF(rng), g = randomRF(rng);
    MoebiusChart chart(GR::fromInts(rng.uniform(-2, 2), 1, rng.uniform(1, 3), 1));
    int kf = f.poleOrder(chart.alpha()), kg = g.poleOrder(chart.alpha());
    const int hi = 4;
    auto cf = moebius_laurent(f, chart, -kf, hi), cg = moebius_laurent(g, chart, -kg, hi);
    auto cfg = moebius_laurent(f * g, chart, -kf - kg, hi - kf - kg);
    for (int j = -kf - kg; j <= hi - kf - kg; ++j) {
      GR s;
      for (int a = -kf; a <= hi; ++a) {
        int b = j - a;
        if (b < -kg || b > hi) continue;
        s += cf[a + kf] * cg[b + kg];
      }
      EXPECT_EQ(cfg[j + kf + kg], s) << "j=" << j;
    }
  }
}
