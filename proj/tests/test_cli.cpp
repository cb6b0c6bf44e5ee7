#include "spinforge/cli.hpp"

#include <json.hpp>
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using spinforge::cli::run;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ProductExample) {
  auto o = run({"product", "--variant", "spin4", "0,0,1,0,0,0,0,0", "0,0,0,1,0,0,0,0"});
  EXPECT_EQ(o.exitCode, 0);
  EXPECT_EQ(o.payload, "0,0,0,0,0,-1,0,0\n");
  auto f = run({"product", "--variant", "b1", "--float", "0,0,1,0,0,0,0,0", "0,0,1,0,0,0,0,0"});
  EXPECT_EQ(f.payload, "0,-1,0,0,0,0,0,0\n");
}

TEST(Cli, NegativeOperandsAreNotOptions) {
  auto o = run({"bracket", "--variant", "spin4", "-1,0,0,0,0,0", "0,1,0,0,0,0"});
  EXPECT_EQ(o.exitCode, 0) << o.diagnostic;
  EXPECT_EQ(o.payload, "0,0,0,1,0,0\n");
}

TEST(Cli, MemberExitCodes) {
  auto yes = run({"member", "--group", "spin4", "1,0,0,0,0,0,0,0"});
  EXPECT_EQ(yes.exitCode, 0);
  EXPECT_EQ(yes.payload, "true\n");
  auto no = run({"member", "--group", "spin4", "2,0,0,0,0,0,0,0"});
  EXPECT_EQ(no.exitCode, 1);
  EXPECT_EQ(no.payload, "false\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).exitCode, 2);
  EXPECT_EQ(run({"frobnicate"}).exitCode, 2);
  EXPECT_EQ(run({"product", "--variant", "b7", "1,0,0,0,0,0,0,0", "1,0,0,0,0,0,0,0"}).exitCode, 2);
  EXPECT_EQ(run({"product", "--variant", "spin4", "1,0,0", "1,0,0,0,0,0,0,0"}).exitCode, 2);
  EXPECT_EQ(run({"product", "--variant", "spin4", "1,x,0,0,0,0,0,0", "1,0,0,0,0,0,0,0"}).exitCode, 2);
  EXPECT_EQ(run({"rep", "--variant", "spin4", "--source", "guess", "1,0,0,0,0,0,0,0"}).exitCode, 2);
  EXPECT_EQ(run({"em", "f", "1,2"}).exitCode, 2);
  EXPECT_EQ(run({"manifold"}).exitCode, 2);
  EXPECT_EQ(run({"verify", "--float"}).exitCode, 2);
  auto o = run({"bench", "--encodings", "mat9"});
  EXPECT_EQ(o.exitCode, 2);
  EXPECT_FALSE(o.diagnostic.empty());
}

TEST(Cli, RepOutputsRowArrays) {
  auto o = run({"rep", "--variant", "spin4", "--source", "printed", "1,0,0,0,0,0,0,0"});
  ASSERT_EQ(o.exitCode, 0);
  auto j = nlohmann::json::parse(o.payload);
  ASSERT_EQ(j.size(), 8u);
  EXPECT_EQ(j[3][3], "1");
  EXPECT_EQ(j[3][4], "0");
}

TEST(Cli, SampleCommands) {
  auto a = run({"sample", "--group", "spin4", "--seed", "3"});
  EXPECT_EQ(a.exitCode, 0);
  EXPECT_EQ(run({"member", "--group", "spin4", a.payload.substr(0, a.payload.size() - 1)}).exitCode, 0);
  auto g = run({"sample", "--group", "g1", "--seed", "3"});
  EXPECT_EQ(g.exitCode, 1);
  EXPECT_NE(g.diagnostic.find("g1"), std::string::npos);
}

TEST(Cli, ManifoldCommands) {
  auto p = run({"manifold", "project", "1,1,0,0,0,0"});
  EXPECT_EQ(p.exitCode, 0);
  EXPECT_NE(p.payload.find("iterations"), std::string::npos);
  EXPECT_EQ(run({"manifold", "project", "0,0,0,0,0,0"}).exitCode, 1);
  auto t = run({"manifold", "tangent", "1,0,0,0,0,0"});
  EXPECT_EQ(t.payload, "0,1,0,0,0,0\n0,0,1,0,0,0\n0,0,0,1,0,0\n0,0,0,0,1,0\n");
  EXPECT_EQ(run({"manifold", "j", "1,0,0,0,0,0", "0,1,0,0,0,0"}).payload, "0,0,0,-1,0,0\n");
  EXPECT_EQ(run({"manifold", "j", "1,0,0,0,0,0", "1,0,0,0,0,0"}).exitCode, 1);
  EXPECT_EQ(run({"manifold", "tangent", "1,1,0,0,0,0"}).exitCode, 1);
  auto s = run({"manifold", "sample", "--seed", "2"});
  EXPECT_EQ(s.exitCode, 0);
  EXPECT_EQ(run({"manifold", "sample", "--seed", "2", "--float"}).exitCode, 0);
}

TEST(Cli, EmCommands) {
  EXPECT_EQ(run({"em", "defect", "1,0,0,0,0,0"}).payload, "defect^2 8\n");
  EXPECT_EQ(run({"em", "defect", "0,0,0,1,2,3"}).payload, "defect^2 0\n");
  auto f = run({"em", "spin", "0,0,0,0,1,0"});
  auto j = nlohmann::json::parse(f.payload);
  EXPECT_EQ(j[3][2], "-1+0i");
  EXPECT_EQ(run({"em", "f", "1,0,0,0,0,0", "--float"}).exitCode, 0);
}

TEST(Cli, VerifyIsDeterministicAndExitsZeroOnSpin4) {
  auto a = run({"verify", "--seed", "42"});
  auto b = run({"verify", "--seed", "42"});
  EXPECT_EQ(a.exitCode, 0);
  EXPECT_EQ(a.payload, b.payload);
  auto j = nlohmann::json::parse(a.payload);
  for (const auto& e : j["entries"])
    if (e["kind"] == "claim") EXPECT_EQ(e["status"], "PASS") << e["identity"];
  EXPECT_EQ(run({"verify", "--variant", "b1"}).exitCode, 1);
}

TEST(Cli, VerifyMatchesGoldenFile) {
  auto o = run({"verify", "--seed", "42"});
  EXPECT_EQ(o.payload, read_file(SPINFORGE_GOLDEN_DIR "/verify_seed42.json"));
}

TEST(Cli, VerifyWritesJsonFile) {
  auto path = (std::filesystem::temp_directory_path() / "spinforge_cli_test.json").string();
  auto o = run({"verify", "--seed", "42", "--json", path, "--text"});
  EXPECT_EQ(o.exitCode, 0);
  EXPECT_EQ(read_file(path), run({"verify", "--seed", "42"}).payload);
  EXPECT_NE(o.payload.find("claims failed: 0"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("SPINFORGE_SEED", "7", 1);
  EXPECT_EQ(spinforge::cli::default_seed(), 7u);
  auto env = run({"verify"});
  ::unsetenv("SPINFORGE_SEED");
  EXPECT_EQ(spinforge::cli::default_seed(), 42u);
  EXPECT_EQ(env.payload, run({"verify", "--seed", "7"}).payload);
  EXPECT_NE(env.payload, run({"verify"}).payload);
}

TEST(Cli, BenchReportsEncodings) {
  auto o = run({"bench", "--encodings", "quatpair,mat4c", "--n", "2000"});
  EXPECT_EQ(o.exitCode, 0);
  EXPECT_NE(o.payload.find("quatpair"), std::string::npos);
  EXPECT_NE(o.payload.find("mat4c"), std::string::npos);
  EXPECT_EQ(o.payload.find("mat8"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  auto o = run({"--help"});
  EXPECT_EQ(o.exitCode, 0);
  EXPECT_NE(o.payload.find("verify"), std::string::npos);
}
