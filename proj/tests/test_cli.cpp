#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rloop_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args, const std::string& out = "") const {
    std::string cmd = std::string(RLOOP_CLI_PATH) + " " + args + " > " + (out.empty() ? path("stdout") : path(out)) +
                      " 2> " + path("stderr");
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

 private:
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, RandomFactorVerifyRoundTrip) {
  ASSERT_EQ(run("random --group so --n 5 --factors 3 --seed 7", "g.json"), 0);
  ASSERT_EQ(run("factor " + path("g.json"), "r.json"), 0);
  EXPECT_EQ(run("verify " + path("g.json") + " " + path("r.json")), 0);
  EXPECT_EQ(run("check " + path("g.json")), 0);
}

TEST_F(Cli, TwistedRoundTrip) {
  ASSERT_EQ(run("random --group csp --n 2 --twist csp-u --factors 2 --seed 3", "g.json"), 0);
  ASSERT_EQ(run("factor --trace " + path("g.json"), "r.json"), 0);
  EXPECT_NE(read("r.json").find("\"steps\""), std::string::npos);
  EXPECT_EQ(run("verify " + path("g.json") + " " + path("r.json")), 0);
}

TEST_F(Cli, DeterministicOutput) {
  ASSERT_EQ(run("random --group g2 --n 7 --factors 2 --seed 11", "a.json"), 0);
  ASSERT_EQ(run("random --group g2 --n 7 --factors 2 --seed 11", "b.json"), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  ASSERT_EQ(run("random --group g2 --n 7 --factors 2 --seed 12", "c.json"), 0);
  EXPECT_NE(read("a.json"), read("c.json"));
}

TEST_F(Cli, IdentityFactorsToNothing) {
  write("id.json", R"({"group": "so", "n": 2, "entries": [["1", "0"], ["0", "1"]]})");
  ASSERT_EQ(run("factor " + path("id.json"), "r.json"), 0);
  EXPECT_NE(read("r.json").find("\"factors\": []"), std::string::npos);
}

TEST_F(Cli, CheckRejectsNonOrthogonal) {
  write("g.json", R"({"group": "so", "n": 2, "entries": [["2", "0"], ["0", "1"]]})");
  EXPECT_EQ(run("check " + path("g.json")), 1);
}

TEST_F(Cli, VerifyRejectsWrongFactorization) {
  ASSERT_EQ(run("random --group so --n 3 --factors 2 --seed 1", "g.json"), 0);
  ASSERT_EQ(run("random --group so --n 3 --factors 2 --seed 2", "h.json"), 0);
  ASSERT_EQ(run("factor " + path("h.json"), "r.json"), 0);
  EXPECT_EQ(run("verify " + path("g.json") + " " + path("r.json")), 1);
}

TEST_F(Cli, ParseErrorsExitThree) {
  write("bad.json", "{\n  \"group\": \"so\",\n  \"n\": 2,,\n}");
  EXPECT_EQ(run("check " + path("bad.json")), 3);
  EXPECT_NE(read("stderr").find("line 3"), std::string::npos);
  write("zero.json", R"({"group": "so", "n": 1, "entries": [["1/0"]]})");
  EXPECT_EQ(run("check " + path("zero.json")), 3);
  EXPECT_EQ(run("check " + path("missing.json")), 3);
  EXPECT_EQ(run("no-such-command"), 3);
}

TEST_F(Cli, DressAndPermute) {
  ASSERT_EQ(run("random-spec --group csp --n 2 --seed 1 --alpha i", "p.json"), 0);
  ASSERT_EQ(run("random-spec --group csp --n 2 --seed 2 --alpha 1+2*i", "q.json"), 0);
  EXPECT_EQ(run("permute " + path("p.json") + " " + path("q.json")), 0);
  EXPECT_EQ(run("permute " + path("p.json") + " " + path("p.json")), 1);
  write("id.json", R"({"group": "csp", "n": 2, "entries": [["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]})");
  EXPECT_EQ(run("dress " + path("p.json") + " " + path("id.json")), 0);
}

TEST_F(Cli, AlgebraQueries) {
  EXPECT_EQ(run("octa table"), 0);
  EXPECT_EQ(run("octa mul --vec 1,0,0,0,0,0,0 --vec 0,1,0,0,0,0,0"), 0);
  EXPECT_EQ(run("affine torus"), 0);
  EXPECT_EQ(run("affine bracket --a 0 --b 1"), 0);
  EXPECT_EQ(run("affine curvature --pqr 1,1,0,0,0,0,0,0,0 --lambda 2"), 0);
  EXPECT_EQ(run("affine curvature --pqr 1,2,0,0,0,0,0,0,0 --lambda 2"), 1);
  EXPECT_EQ(run("affine curvature --pqr 1,2,0,0,0,0,0,0,0 --lambda 2 --corrected-entry"), 0);
}
