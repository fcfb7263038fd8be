#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RUDIN_BIN) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, CorankGeneralOnCounterexample) {
  const auto r = run("corank " + fixture("counterexample.json") + " --method=general");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "co-rank = 2")) << r.out;
}

TEST(Cli, CorankIzuchiBanner) {
  const auto r = run("corank " + fixture("counterexample.json") + " --method=izuchi");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "co-rank = 1")) << r.out;
  EXPECT_TRUE(has(r.out, "KNOWN-INCORRECT")) << r.out;
}

TEST(Cli, GeneralAndMonotoneAgreeOnFixtures) {
  for (const char* f : {"counterexample.json", "distinct_points.json", "empty_overlap.json"}) {
    const auto g = run(std::string("corank ") + fixture(f) + " --method=general");
    const auto m = run(std::string("corank ") + fixture(f) + " --method=monotone");
    ASSERT_EQ(g.code, 0) << g.out;
    ASSERT_EQ(m.code, 0) << m.out;
    EXPECT_EQ(g.out.substr(g.out.rfind("co-rank")), m.out.substr(m.out.rfind("co-rank"))) << f;
  }
  EXPECT_TRUE(has(run("corank " + fixture("empty_overlap.json")).out, "co-rank = 0"));
  EXPECT_TRUE(has(run("corank " + fixture("distinct_points.json")).out, "co-rank = 1"));
}

TEST(Cli, CorankJsonReport) {
  const std::string out = ::testing::TempDir() + "rudin_report.json";
  const auto r = run("corank " + fixture("counterexample.json") + " --method=monotone --json " + out);
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("corank"), 2);
  EXPECT_EQ(j.at("method"), "monotone");
}

TEST(Cli, MonotonePreconditionExitsThree) {
  const auto r = run("corank " + fixture("growing_window_3.json") + " --method=monotone");
  EXPECT_EQ(r.code, 3) << r.out;
  const auto iz = run("corank " + fixture("growing_window_3.json") + " --method=izuchi");
  EXPECT_EQ(iz.code, 3) << iz.out;
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("corank /nonexistent.json").code, 2);
  EXPECT_EQ(run("corank " + fixture("counterexample.json") + " --method=bogus").code, 2);
  EXPECT_EQ(run("minimal-rep --tuples \"(2,1),(1\"").code, 2);
  EXPECT_EQ(run("minimal-rep --tuples \"(2,1),(1,1,1)\"").code, 2);
  EXPECT_EQ(run("minimal-rep --tuples \"(0,1)\"").code, 2);
  EXPECT_EQ(run("").code, 2);

  const std::string bad = ::testing::TempDir() + "rudin_bad.json";
  std::ofstream(bad) << "{\n  \"n\": 2,\n  \"window\": {\"kMin\": 0}\n}\n";
  const auto r = run("corank " + bad);
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "line 3")) << r.out;
}

TEST(Cli, MinimalRep) {
  const auto r = run("minimal-rep --tuples \"(2,1),(1,1),(1,2)\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "{(2,1), (1,2)}")) << r.out;
  EXPECT_TRUE(has(r.out, "#A~ = 2")) << r.out;
  const auto one = run("minimal-rep --tuples \"(3,3)\"");
  EXPECT_TRUE(has(one.out, "{(3,3)}")) << one.out;
  EXPECT_TRUE(has(one.out, "#A~ = 1")) << one.out;
  const auto num = run("minimal-rep --point 0.5,0 --point 0,0.5 --tuples \"(2,1),(1,1),(1,2)\"");
  EXPECT_EQ(num.code, 0) << num.out;
  EXPECT_TRUE(has(num.out, "nakayama co-rank = 2")) << num.out;
}

TEST(Cli, VerifyAlgebra) {
  const auto r = run("verify --suite algebra --seed 3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_FALSE(has(r.out, "FAIL"));
}

TEST(Cli, WorkedExamplesSeedIndependent) {
  const auto a = run("paper-examples");
  const auto b = run("paper-examples --seed 12345");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(b.code, 0) << b.out;
  auto table = [](const std::string& s) { return s.substr(0, s.find("\n\n")); };
  EXPECT_EQ(table(a.out), table(b.out));
  const auto env = run("paper-examples --json -");
  EXPECT_EQ(env.code, 0);
  EXPECT_TRUE(has(env.out, "\"assertions\"")) << env.out;
}

TEST(Cli, SeedFromEnvironment) {
  const std::string cmd = std::string("RUDIN_SEED=7 ") + RUDIN_BIN + " verify --suite algebra 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_TRUE(has(out, "seed 7")) << out;
  EXPECT_TRUE(has(run("verify --suite algebra --seed 9").out, "seed 9"));
}
