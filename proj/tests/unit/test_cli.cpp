#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pqaka_cli/cli.hpp"
#include "pqaka_cli/reports.hpp"

namespace fs = std::filesystem;
using namespace pqaka::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "pqaka");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "pqaka_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

std::size_t line_count(const std::string& path) {
  std::ifstream in(path);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += !line.empty();
  return n;
}

}  // namespace

TEST(Cli, RunWritesOneTranscriptPerSession) {
  const auto log = tmp("t.log");
  const auto r = invoke({"run", "--kem", "test", "--sessions", "10", "--mode", "mixed", "--seed",
                         "7", "--out", log});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(line_count(log), 10u);
}

TEST(Cli, RunWithZeroSessionsWritesAnEmptyLog) {
  const auto log = tmp("empty.log");
  const auto r = invoke({"run", "--sessions", "0", "--out", log});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(fs::exists(log));
  EXPECT_EQ(fs::file_size(log), 0u);
}

TEST(Cli, UnknownSuiteListsTheRegisteredOnes) {
  const auto r = invoke({"run", "--kem", "nosuch"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("registered suites: test"), std::string::npos);
  EXPECT_NE(r.err.find("kyber"), std::string::npos);
}

TEST(Cli, BadFlagsAreUsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--mode", "sideways"}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--sessions", "-3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"attack"}).code, kExitUsage);
  EXPECT_EQ(invoke({"attack", "nosuch"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bench", "--iters", "0", "--kem", "test"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sizes", "--config", tmp("missing.json")}).code, kExitUsage);
  EXPECT_EQ(invoke({"nosuch"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

TEST(Cli, AttackAllHoldsAndReportsControlsSeparately) {
  const auto out = tmp("verdicts.jsonl");
  const auto r = invoke({"attack", "all", "--kem", "test", "--seed", "0", "--out", out});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("negative controls"), std::string::npos);
  EXPECT_GT(line_count(out), 10u);
}

TEST(Cli, AttackReplayFailsWithTheMacCheckDisabled) {
  EXPECT_EQ(invoke({"attack", "replay", "--unsafe-skip-ue-mac-check"}).code, kExitFailure);
  EXPECT_EQ(invoke({"attack", "replay"}).code, kExitOk);
}

TEST(Cli, HiddenHookIsNotAdvertised) {
  EXPECT_EQ(invoke({"attack", "--help"}).out.find("unsafe"), std::string::npos);
}

TEST(Cli, ConfigFillsFlagsAndFlagsWin) {
  const auto cfg = tmp("cfg.json");
  const auto log = tmp("cfg.log");
  std::ofstream(cfg) << R"({"kem": "test", "sessions": 4, "seed": 3, "out": ")" << log << R"("})";
  EXPECT_EQ(invoke({"run", "--config", cfg}).code, kExitOk);
  EXPECT_EQ(line_count(log), 4u);
  EXPECT_EQ(invoke({"run", "--config", cfg, "--sessions", "2"}).code, kExitOk);
  EXPECT_EQ(line_count(log), 2u);

  std::ofstream(cfg) << R"({"kem": "nosuch"})";
  EXPECT_EQ(invoke({"run", "--config", cfg}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--config", cfg, "--kem", "test", "--sessions", "1"}).code, kExitOk);
  std::ofstream(cfg) << R"({"colour": "blue"})";
  EXPECT_EQ(invoke({"sizes", "--config", cfg}).code, kExitUsage);
  std::ofstream(cfg) << "not json";
  EXPECT_EQ(invoke({"sizes", "--config", cfg}).code, kExitUsage);
}

TEST(Cli, SizesAreDeterministicAndListEverySuite) {
  const auto a = invoke({"sizes"});
  const auto b = invoke({"sizes"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  for (const char* name : {"test", "kyber", "mceliece", "bike", "hqc"}) {
    EXPECT_NE(a.out.find(name), std::string::npos) << name;
  }
}

TEST(Cli, BenchReportsRowsAndJson) {
  const auto out = tmp("bench.jsonl");
  const auto r = invoke({"bench", "--kem", "test,kyber", "--iters", "20", "--out", out});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(line_count(out), 2u);
}

TEST(Reports, UnavailableSuitesBecomeMarkedRows) {
  std::vector<BenchRow> rows{BenchRow{"ghost", false, "not compiled in"}};
  std::ostringstream os;
  print_bench(os, rows);
  EXPECT_NE(os.str().find("unavailable"), std::string::npos);
  EXPECT_NE(bench_jsonl(rows).find("\"available\":false"), std::string::npos);
}

TEST(Reports, TablesAreAligned) {
  const auto t = format_table({"a", "bbb"}, {{"xxxx", "y"}, {"z", "w"}});
  EXPECT_EQ(t, "a     bbb\n----  ---\nxxxx  y\nz     w\n");
}
