// Runs the hfl binary on the fixture graphs and compares each report, minus
// wall_time_ms, with tests/golden/<name>.json. Set HFL_REGENERATE_GOLDEN=1
// to rewrite the golden files instead.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + HFL_CLI_PATH + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Drops the timing field, the only part of a report allowed to vary.
std::string StripTiming(const std::string& report) {
  static const std::regex timing(",\n  \"wall_time_ms\": [0-9]+\n");
  return std::regex_replace(report, timing, "\n");
}

std::string Data(const std::string& name) {
  return std::string(HFL_TEST_DATA_DIR) + "/" + name;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GoldenCase {
  const char* name;
  std::string args;
};

std::vector<GoldenCase> Cases() {
  const std::string p3 = Data("p3.graph");
  const std::string p5 = Data("p5.graph");
  const std::string p6 = Data("p6.graph");
  const std::string c6 = Data("c6.graph");
  return {
      {"p3_profile", "profile " + p3 + " --k 1"},
      {"p3_game_exact", "game " + p3 + " --k 1 --exact"},
      {"p3_game_mwu", "game " + p3 + " --k 1 --mwu --rounds 2000 --seed 1"},
      {"p3_separators_minimal", "separators " + p3 + " --k 1 --minimal"},
      {"p3_separators_all", "separators " + p3 + " --k 1"},
      {"p3_separators_trivial", "separators " + p3 + " --k 3 --minimal"},
      {"p3_folner", "folner " + p3 + " --eps 1/2 --k 2"},
      {"p3_greedy", "greedy " + p3 + " --eps 1/2 --k 1"},
      {"p5_folner", "folner " + p5 + " --eps 1/2 --k 2"},
      {"p6_profile", "profile " + p6 + " --k 2"},
      {"p6_game_exact", "game " + p6 + " --k 2"},
      {"p6_game_mwu", "game " + p6 + " --k 2 --mwu --rounds 4000 --seed 1"},
      {"p6_separators_minimal", "separators " + p6 + " --k 2 --minimal"},
      {"p6_folner", "folner " + p6 + " --eps 1/2 --k 2"},
      {"p6_greedy", "greedy " + p6 + " --eps 1/2 --k 2"},
      {"c6_profile", "profile " + c6 + " --k 2"},
      {"c6_game_exact", "game " + c6 + " --k 2"},
      {"c6_game_mwu", "game " + c6 + " --k 2 --mwu --rounds 4000 --seed 5"},
      {"c6_separators_minimal", "separators " + c6 + " --k 2 --minimal"},
      {"c6_folner", "folner " + c6 + " --eps 0 --k 3"},
      {"c6_greedy_stuck", "greedy " + c6 + " --eps 0 --k 2"},
      {"c6_greedy", "greedy " + c6 + " --eps 1/2 --k 2"},
      {"cycle8_schreier", "schreier --family cycle:8"},
      {"cycle8_schreier_profile", "schreier --family cycle:8 --profile --k 1"},
  };
}

class CliGoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(CliGoldenTest, MatchesGoldenAndIsDeterministic) {
  const GoldenCase& c = GetParam();
  RunResult first = RunCli(c.args, "HFL_WORKERS=1");
  ASSERT_EQ(first.exit_code, 0) << c.args;
  const std::string payload = StripTiming(first.out);
  ASSERT_NE(payload, first.out) << "no timing field in " << first.out;

  const std::string golden_path =
      std::string(HFL_GOLDEN_DIR) + "/" + c.name + ".json";
  const char* regen = std::getenv("HFL_REGENERATE_GOLDEN");
  if (regen != nullptr && std::string(regen) == "1") {
    std::ofstream(golden_path, std::ios::binary) << payload;
  }
  EXPECT_EQ(payload, ReadFile(golden_path)) << golden_path;

  EXPECT_EQ(StripTiming(RunCli(c.args, "HFL_WORKERS=1").out), payload);
  EXPECT_EQ(StripTiming(RunCli(c.args, "HFL_WORKERS=3").out), payload);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, CliGoldenTest, ::testing::ValuesIn(Cases()),
                         [](const auto& info) { return info.param.name; });

TEST(CliTest, SpecValuesInGameReport) {
  RunResult r = RunCli("game " + Data("p3.graph") + " --k 1 --exact");
  EXPECT_THAT(r.out, ::testing::HasSubstr("\"eps_star\": \"1/2\""));
  EXPECT_THAT(r.out, ::testing::HasSubstr("\"w_star\": \"1/2\""));
  EXPECT_THAT(r.out, ::testing::HasSubstr("\"gap\": \"0/1\""));
}

TEST(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(RunCli("game /nonexistent/file --k 1").exit_code, 2);
  EXPECT_EQ(RunCli("game " + Data("p3.graph")).exit_code, 2);
  EXPECT_EQ(RunCli("greedy " + Data("p3.graph") + " --eps x --k 1").exit_code, 2);
  EXPECT_EQ(RunCli("schreier --family cycle:7").exit_code, 2);
  EXPECT_EQ(RunCli("schreier --family triangle:7").exit_code, 2);
  EXPECT_EQ(RunCli("bogus").exit_code, 2);
  EXPECT_EQ(RunCli("game " + Data("p3.graph") + " --k 1", "HFL_ENUM_CAP=zero")
                .exit_code,
            2);
}

TEST(CliTest, SizeLimitExitsThree) {
  RunResult r = RunCli("game " + Data("p6.graph") + " --k 1", "HFL_ENUM_CAP=4");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(RunCli("game " + Data("p6.graph") + " --k 1 --mwu --rounds 100",
                   "HFL_ENUM_CAP=4")
                .exit_code,
            0);
}

}  // namespace
