#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pqaka/crypto/kem.hpp"
#include "pqaka/sim.hpp"
#include "pqaka/ue.hpp"

namespace pqaka::attacks {

struct Evidence {
  std::size_t step = 0;
  std::string channel;
  std::string direction;
  std::string note;
};

Evidence cite(const sim::TranscriptEntry& entry, std::string note);

struct Verdict {
  std::string scenario;
  std::string check;
  bool holds = false;
  bool control = false;        // negative control: a deliberately weakened setup
  bool expected_holds = true;  // controls are expected to fail
  std::vector<Evidence> evidence;
  std::string detail;

  bool as_expected() const noexcept { return holds == expected_holds; }
  std::string to_json() const;
};

struct ScenarioReport {
  std::string scenario;
  std::vector<Verdict> checks;
  std::vector<Verdict> controls;

  /// Every main check holds (controls are not part of this).
  bool holds() const noexcept;
  /// Every control came out the way it was expected to.
  bool controls_discriminate() const noexcept;
  /// One verdict per line, checks first.
  std::string to_jsonl() const;
};

struct ScenarioConfig {
  crypto::KemHandle suite;
  std::uint64_t seed = 0;
  UeHooks ue_hooks;  // applied to every honest UE the scenarios build
  std::size_t closure_depth = 4;
};

ScenarioReport scenario_replay_challenge(const ScenarioConfig& cfg);
ScenarioReport scenario_linkability_probe(const ScenarioConfig& cfg);
ScenarioReport scenario_compromised_sn_binding(const ScenarioConfig& cfg);
ScenarioReport scenario_forward_secrecy_game(const ScenarioConfig& cfg);

/// Scenario names accepted by run_scenario, in run order.
const std::vector<std::string>& scenario_names();
/// Throws UsageError on an unknown name.
ScenarioReport run_scenario(std::string_view name, const ScenarioConfig& cfg);

struct FuzzReport {
  std::size_t total = 0;
  std::size_t silent_aborts = 0;
  std::vector<std::string> failures;  // descriptions of flips the UE accepted
};

/// Flips every bit of AUTN and c2 in one fixed honest challenge and
/// counts the UE's silent aborts.
FuzzReport challenge_bitflip_fuzz(const ScenarioConfig& cfg);

}  // namespace pqaka::attacks
