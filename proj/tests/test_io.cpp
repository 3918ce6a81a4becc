#include <gtest/gtest.h>

#include "rloop/io.hpp"
#include "rloop/random.hpp"
#include "testutil.hpp"

using namespace rloop;
using namespace rloop::test;

namespace {

// Entries of p_{i, span(e1 + i e2)} worked out by hand: with mu = (l - i)/(l + i),
// (mu + 1/mu)/2 = (l^2 - 1)/(l^2 + 1) and i(1/mu - mu)/2 = -2l/(l^2 + 1).
const char* kSo3Factor = R"({
  "group": "so", "n": 3,
  "entries": [
    [{"num": ["-1", "0", "1"], "den": [{"root": "i", "mult": 1}, {"root": "-i", "mult": 1}], "scale": "1"},
     {"num": ["0", "-2"], "den": [{"root": "i", "mult": 1}, {"root": "-i", "mult": 1}], "scale": "1"},
     {"num": ["0"], "den": [], "scale": "1"}],
    [{"num": ["0", "2"], "den": [{"root": "i", "mult": 1}, {"root": "-i", "mult": 1}], "scale": "1"},
     {"num": ["-1", "0", "1"], "den": [{"root": "i", "mult": 1}, {"root": "-i", "mult": 1}], "scale": "1"},
     {"num": ["0"], "den": [], "scale": "1"}],
    [{"num": ["0"], "den": [], "scale": "1"},
     {"num": ["0"], "den": [], "scale": "1"},
     {"num": ["1"], "den": [], "scale": "1"}]
  ]
})";

}  // namespace

TEST(Io, ScalarsRoundTrip) {
  for (const char* s : {"0", "1", "-3/4", "i", "-i", "1/2+3/5*i", "-7*i"}) {
    GR z = gr(s);
    EXPECT_EQ(scalarFromJson(toJson(z), "x"), z);
  }
  EXPECT_THROW(scalarFromJson(Json("1/0"), "x"), ParseError);
  EXPECT_THROW(scalarFromJson(Json("1+"), "x"), ParseError);
  EXPECT_EQ(scalarFromJson(Json(3), "x"), GR(3));
  EXPECT_THROW(scalarFromJson(Json(true), "x"), ParseError);
}

TEST(Io, HandWrittenFactorDocument) {
  LoopDocument d = loopFromJson(parseJsonText(kSo3Factor));
  EXPECT_EQ(d.group.kind, GroupKind::SO);
  EXPECT_FALSE(d.twist);
  EXPECT_TRUE(d.loop == materialize(SimpleFactorSpec::so(gr("i"), span({vec({"1", "i", "0"})}, 3))));
}

TEST(Io, IdentityDocument) {
  LoopDocument d{GroupContext::csp(2), std::nullopt, MatrixLoop::identity(4)};
  LoopDocument back = loopFromJson(parseJsonText(dumpJson(toJson(d))));
  EXPECT_TRUE(back.loop.isIdentity());
  EXPECT_EQ(back.group.dim(), 4);
}

TEST(Io, LoopsRoundTripByteIdentical) {
  Rng rng(1);
  for (const auto& ctx : {GroupContext::so(5), GroupContext::csp(2), GroupContext::g2()}) {
    LoopDocument d{ctx, std::nullopt, random_loop(rng, ctx, 2).loop};
    std::string text = dumpJson(toJson(d));
    LoopDocument back = loopFromJson(parseJsonText(text));
    EXPECT_TRUE(back.loop == d.loop);
    EXPECT_EQ(dumpJson(toJson(back)), text);
  }
  auto tw = TwistContext::soGrassmannian(5, 2);
  LoopDocument d{tw.group(), tw, random_twisted_loop(rng, tw, 1).loop};
  LoopDocument back = loopFromJson(parseJsonText(dumpJson(toJson(d))));
  ASSERT_TRUE(back.twist);
  EXPECT_EQ(back.twist->tag(), tw.tag());
}

TEST(Io, SpecsAndResultsRoundTrip) {
  Rng rng(2);
  for (const auto& ctx : {GroupContext::gl(3), GroupContext::so(4), GroupContext::csp(2), GroupContext::g2()}) {
    SimpleFactorSpec s = random_spec(rng, ctx, random_alpha(rng));
    EXPECT_EQ(specFromJson(parseJsonText(dumpJson(toJson(s)))), s);
  }
  auto rl = random_loop(rng, GroupContext::so(4), 2);
  auto r = factor_so(rl.loop);
  auto back = resultFromJson(parseJsonText(dumpJson(toJson(r, true))));
  EXPECT_TRUE(verify_product(back, rl.loop));
  EXPECT_EQ(dumpJson(toJson(back, false)), dumpJson(toJson(r, false)));
}

TEST(Io, ParseErrorsCarryLocation) {
  try {
    parseJsonText("{\n  \"group\": \"so\",\n  \"n\": 3,,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 0);
  }
  std::string bad = kSo3Factor;
  bad.replace(bad.find("\"-2\""), 4, "\"1/0\"");
  EXPECT_THROW(loopFromJson(parseJsonText(bad)), ParseError);
  EXPECT_THROW(loopFromJson(parseJsonText(R"({"group": "so", "n": 3, "entries": [["1"]]})")), ParseError);
  EXPECT_THROW(loopFromJson(parseJsonText(R"({"group": "xx", "n": 3, "entries": []})")), ParseError);
}

TEST(Io, VectorSyntax) {
  EXPECT_EQ(parseVector("1,i,0"), vec({"1", "i", "0"}));
  EXPECT_EQ(parseVector(" 1/2 , -i "), vec({"1/2", "-i"}));
  EXPECT_THROW(parseVector("1,,2"), ParseError);
}
