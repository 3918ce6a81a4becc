#include <gtest/gtest.h>

#include "rloop/factorize.hpp"
#include "rloop/octonion.hpp"
#include "rloop/random.hpp"
#include "testutil.hpp"

using namespace rloop;
using namespace rloop::test;

namespace {

void expectSound(const FactorizationResult& r, const MatrixLoop& g) {
  EXPECT_TRUE(verify_product(r, g));
  EXPECT_TRUE(r.product() == g);
  for (const auto& s : r.steps) EXPECT_TRUE(s.decreased()) << s.phase << " at " << s.alpha.str();
}

MatrixLoop productOf(const std::vector<SimpleFactorSpec>& specs) {
  MatrixLoop p = MatrixLoop::identity(7);
  for (const auto& s : specs) p = p * materialize(s);
  return p;
}

}  // namespace

TEST(Factorize, IdentityGivesNoFactors) {
  for (const auto& ctx : {GroupContext::so(3), GroupContext::csp(2), GroupContext::g2()}) {
    auto r = factorize(MatrixLoop::identity(ctx.dim()), ctx);
    EXPECT_TRUE(r.factors.empty());
    EXPECT_TRUE(verify_product(r, MatrixLoop::identity(ctx.dim())));
  }
}

TEST(Factorize, SingleFactorIsRecovered) {
  MatrixLoop p = materialize(SimpleFactorSpec::so(gr("i"), span({vec({"1", "i", "0"})}, 3)));
  auto r = factor_so(p);
  ASSERT_EQ(r.factors.size(), 1u);
  EXPECT_TRUE(r.factors[0].loop() == p || r.factors[0].loop() == loop_inv(p));
  expectSound(r, p);
}

class Reconstruct : public ::testing::TestWithParam<GroupContext> {};

TEST_P(Reconstruct, RandomLoops) {
  Rng rng(100 + GetParam().dim());
  for (int t = 0; t < 6; ++t) {
    auto rl = random_loop(rng, GetParam(), 3, 2);
    auto r = factorize(rl.loop, GetParam());
    expectSound(r, rl.loop);
    EXPECT_LE(static_cast<int>(r.steps.size()), r.budget);
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, Reconstruct,
                         ::testing::Values(GroupContext::so(3), GroupContext::so(4), GroupContext::so(6),
                                           GroupContext::csp(1), GroupContext::csp(2), GroupContext::g2()),
                         [](const auto& info) {
                           std::string t = info.param.tag() + std::to_string(info.param.dim());
                           std::erase_if(t, [](char c) { return !std::isalnum(static_cast<unsigned char>(c)); });
                           return t;
                         });

TEST(Factorize, WrongFactorsFailVerification) {
  Rng rng(7);
  for (int t = 0; t < 4; ++t) {
    auto rl = random_loop(rng, GroupContext::so(4), 3, 2, true);
    auto r = factor_so(rl.loop);
    ASSERT_GE(r.factors.size(), 2u);
    auto dropped = r;
    dropped.factors.pop_back();
    EXPECT_FALSE(verify_product(dropped, rl.loop));
    auto swapped = r;
    std::swap(swapped.factors[0], swapped.factors[1]);
    // Two factors may commute; only require verify to agree with exact multiplication.
    EXPECT_EQ(verify_product(swapped, rl.loop), swapped.product() == rl.loop);
  }
}

TEST(Factorize, RejectsNonMembers) {
  MatrixLoop g = materialize(SimpleFactorSpec::gl(gr("i"), span({e(3, 0)}, 3)));
  EXPECT_THROW(factor_so(g), NotAMember);
  EXPECT_THROW(factor_g2(MatrixLoop::identity(6)), DimensionMismatch);
  EXPECT_THROW(factorize(MatrixLoop::identity(3), GroupContext::gl(3)), InvalidSpec);
  // complex conjugate factor alone is not real
  MatrixLoop half = materialize(SimpleFactorSpec::gl(gr("i"), span({vec({"1", "i"})}, 2)));
  EXPECT_THROW(factor_so(half), NotAMember);
}

TEST(Factorize, CspZeroPhase) {
  // inverse factors have zeros in the upper half plane
  Rng rng(8);
  SimpleFactorSpec s = random_spec(rng, GroupContext::csp(2), gr("1+i"));
  MatrixLoop g = inverse_closed_form(s) * materialize(random_spec(rng, GroupContext::csp(2), gr("-1+2*i")));
  auto r = factor_csp(g);
  expectSound(r, g);
  bool sawZero = false;
  for (const auto& st : r.steps) sawZero |= st.phase == "zero";
  EXPECT_TRUE(sawZero);
}

TEST(SplitPair, OrthogonalLinesGiveOnePlane) {
  const WeightFrame& f = weightFrame();
  GR a = gr("i");
  MatrixLoop g = materialize(SimpleFactorSpec::g2(a, f.L1 + f.L2));
  auto specs = split_simple_pole_pair(g, a);
  ASSERT_EQ(specs.size(), 1u);
  EXPECT_EQ(specs[0].W, f.L1 + f.L2);
}

TEST(SplitPair, WeightLinesNeedThirdLine) {
  const WeightFrame& f = weightFrame();
  GR a = gr("i");
  // K is not perpendicular to L1 + conj(L1), so R must be found; it lies on the L3 axis
  Subspace k = span({addVec(f.L2.vec(0), f.L1.conj().vec(0))}, 7);
  MatrixLoop g = materialize(SimpleFactorSpec::g2(a, f.L1 + f.L3.conj())) * materialize(SimpleFactorSpec::g2(a, f.L3 + k));
  auto specs = split_simple_pole_pair(g, a);
  ASSERT_EQ(specs.size(), 2u);
  for (const auto& s : specs) EXPECT_TRUE(validate(s).ok) << s.str();
  EXPECT_TRUE(specs[0].W.contains(f.L3.conj()));
  EXPECT_TRUE(specs[1].W.contains(f.L3));
  EXPECT_TRUE(productOf(specs) == g);
  EXPECT_THROW(split_simple_pole_pair(MatrixLoop::identity(7), a), InvalidSpec);
}

TEST(SplitPair, RandomPairsReconstruct) {
  Rng rng(12);
  int twoPlane = 0;
  for (int t = 0; t < 6; ++t) {
    GR a = random_alpha(rng);
    Subspace l = random_isotropic_line(rng, 7);
    Subspace b = multiplier_plane(l);
    // a conj(L) component takes K out of (L + conj(L))^perp
    Subspace k = span({addVec(b.vec(0), scaleVec(l.conj().vec(0), rng.nonzeroGaussianInt(2)))}, 7);
    SimpleFactorSpec p = SimpleFactorSpec::g2pair(a, l, k);
    ASSERT_TRUE(validate(p).ok);
    MatrixLoop g = materialize(p);
    GR pole = total_degree(g, a).k == 1 ? a : a.conj();
    auto specs = split_simple_pole_pair(g, pole);
    twoPlane += specs.size() == 2;
    EXPECT_TRUE(productOf(specs) == g);
  }
  EXPECT_GT(twoPlane, 0);
}

TEST(Twisted, FactorsAreIndividuallyTwisted) {
  Rng rng(9);
  std::vector<std::pair<TwistContext, int>> ts = {{TwistContext::cspU(2), -1},
                                                  {TwistContext::soGrassmannian(5, 2), -1},
                                                  {TwistContext::soU(3), -1},
                                                  {TwistContext::g2SO4(), 1}};
  for (const auto& [tw, maxQ] : ts) {
    for (int t = 0; t < 3; ++t) {
      auto rl = random_twisted_loop(rng, tw, 2, 2, maxQ);
      auto r = factor_twisted(rl.loop, tw);
      expectSound(r, rl.loop);
      for (const auto& f : r.factors) EXPECT_TRUE(isTwisted(f.loop(), tw)) << tw.tag() << " " << f.str();
    }
  }
}

TEST(Twisted, RejectsUntwistedLoop) {
  Rng rng(10);
  auto tw = TwistContext::soGrassmannian(4, 2);
  MatrixLoop g = materialize(random_spec(rng, tw.group(), gr("1+i")));
  EXPECT_THROW(factor_twisted(g, tw), NotTwisted);
}

TEST(Factorize, Deterministic) {
  Rng a(11), b(11);
  auto la = random_loop(a, GroupContext::g2(), 2);
  auto lb = random_loop(b, GroupContext::g2(), 2);
  ASSERT_TRUE(la.loop == lb.loop);
  auto ra = factor_g2(la.loop), rb = factor_g2(lb.loop);
  ASSERT_EQ(ra.factors.size(), rb.factors.size());
  for (size_t i = 0; i < ra.factors.size(); ++i) EXPECT_EQ(ra.factors[i].str(), rb.factors[i].str());
}
