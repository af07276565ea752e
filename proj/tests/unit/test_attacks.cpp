#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "pqaka/attacks.hpp"
#include "pqaka/errors.hpp"

using namespace pqaka;
using namespace pqaka::attacks;

namespace {

ScenarioConfig config(std::uint64_t seed = 0, bool skip_mac = false) {
  ScenarioConfig c;
  c.suite = crypto::make_test_kem();
  c.seed = seed;
  c.ue_hooks.skip_mac_check = skip_mac;
  return c;
}

}  // namespace

class Scenario : public ::testing::TestWithParam<std::string> {};

TEST_P(Scenario, HoldsAndControlsDiscriminate) {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const auto rep = run_scenario(GetParam(), config(seed));
    EXPECT_FALSE(rep.checks.empty());
    EXPECT_FALSE(rep.controls.empty());
    for (const auto& v : rep.checks) EXPECT_TRUE(v.holds) << v.check << ": " << v.detail;
    for (const auto& v : rep.controls) EXPECT_TRUE(v.as_expected()) << v.check << ": " << v.detail;
    EXPECT_TRUE(rep.holds());
    EXPECT_TRUE(rep.controls_discriminate());
  }
}

TEST_P(Scenario, VerdictsSerializeAsJsonLines) {
  const auto rep = run_scenario(GetParam(), config());
  std::stringstream ss(rep.to_jsonl());
  std::size_t n = 0;
  for (std::string line; std::getline(ss, line); ++n) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("scenario"), GetParam());
    EXPECT_TRUE(j.contains("holds"));
    EXPECT_TRUE(j.contains("control"));
  }
  EXPECT_EQ(n, rep.checks.size() + rep.controls.size());
}

INSTANTIATE_TEST_SUITE_P(All, Scenario, ::testing::ValuesIn(scenario_names()),
                         [](const auto& info) {
                           std::string n = info.param;
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

TEST(Attacks, ReplayFailsWhenTheUeSkipsItsMacCheck) {
  EXPECT_FALSE(scenario_replay_challenge(config(0, true)).holds());
}

TEST(Attacks, UnknownScenarioIsAUsageError) {
  EXPECT_THROW(run_scenario("nosuch", config()), UsageError);
}

TEST(Attacks, BitflipFuzzIsAllSilentAborts) {
  const auto rep = challenge_bitflip_fuzz(config());
  EXPECT_EQ(rep.total, 8u * (64 + 32));
  EXPECT_EQ(rep.silent_aborts, rep.total);
  EXPECT_TRUE(rep.failures.empty());
}

TEST(Attacks, BitflipFuzzCatchesADisabledMacCheck) {
  const auto rep = challenge_bitflip_fuzz(config(0, true));
  EXPECT_LT(rep.silent_aborts, rep.total);
}

TEST(Attacks, ScenariosHoldWithARealBackend) {
  if (!crypto::kem_available("kyber")) GTEST_SKIP();
  ScenarioConfig c;
  c.suite = crypto::find_kem("kyber");
  for (const auto& name : scenario_names()) {
    const auto rep = run_scenario(name, c);
    EXPECT_TRUE(rep.holds()) << name;
    EXPECT_TRUE(rep.controls_discriminate()) << name;
  }
  EXPECT_EQ(challenge_bitflip_fuzz(c).silent_aborts, 8u * (64 + 768));
}
