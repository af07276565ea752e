#include "pqaka_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pqaka/attacks.hpp"
#include "pqaka/errors.hpp"
#include "pqaka/sim.hpp"
#include "pqaka_cli/reports.hpp"

namespace pqaka::cli {

namespace {

struct Flags {
  std::string kem;
  std::size_t sessions = 10;
  std::string mode = "supi";
  std::uint64_t seed = 0;
  std::string out;
  std::size_t iters = 200;
  std::string config;
  std::string scenario;
  bool skip_ue_mac_check = false;
};

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool is_known(const std::string& name) {
  const auto known = crypto::known_kem_names();
  return std::find(known.begin(), known.end(), name) != known.end();
}

[[noreturn]] void unknown_suite(const std::string& name) {
  throw UsageError("unknown KEM suite '" + name + "'; registered suites: " +
                   join(crypto::known_kem_names()));
}

/// Fills every option that was not given on the command line from the
/// JSON config file.
void apply_config(CLI::App& cmd, Flags& f) {
  if (f.config.empty()) return;
  std::ifstream in(f.config);
  if (!in) throw UsageError("cannot read config file " + f.config);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + f.config + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config " + f.config + ": expected a JSON object");

  auto unset = [&](const char* name) {
    auto* opt = cmd.get_option_no_throw(std::string("--") + name);
    return opt && opt->count() == 0;
  };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "kem") {
        if (!unset("kem")) continue;
        if (value.is_array()) {
          f.kem = join(value.get<std::vector<std::string>>(), ",");
        } else {
          f.kem = value.get<std::string>();
        }
      } else if (key == "sessions") {
        if (unset("sessions")) f.sessions = value.get<std::size_t>();
      } else if (key == "mode") {
        if (unset("mode")) f.mode = value.get<std::string>();
      } else if (key == "seed") {
        if (unset("seed")) f.seed = value.get<std::uint64_t>();
      } else if (key == "out") {
        if (unset("out")) f.out = value.get<std::string>();
      } else if (key == "iters") {
        if (unset("iters")) f.iters = value.get<std::size_t>();
      } else {
        throw UsageError("config " + f.config + ": unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + f.config + ": " + e.what());
  }
  if (f.mode != "supi" && f.mode != "guti" && f.mode != "mixed") {
    throw UsageError("config " + f.config + ": mode must be supi, guti or mixed");
  }
}

void write_file(const std::string& path, const std::string& body) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << body;
  if (!out) throw Error("write to " + path + " failed");
}

crypto::KemHandle single_suite(const std::string& name) {
  if (!is_known(name)) unknown_suite(name);
  return crypto::find_kem(name);
}

int cmd_run(const Flags& f, std::ostream& out) {
  auto suite = single_suite(f.kem);
  UeHooks hooks;
  hooks.skip_mac_check = f.skip_ue_mac_check;

  constexpr std::size_t kSubscribers = 4;
  sim::World world(suite, f.seed);
  world.add_serving_network();
  for (std::size_t i = 0; i < kSubscribers; ++i) {
    char supi[32];
    std::snprintf(supi, sizeof supi, "imsi-00101%010zu", i + 1);
    world.add_subscriber(supi, {}, hooks);
  }
  std::mt19937_64 coin(f.seed ^ 0x6d69786564ULL);

  std::string log;
  std::size_t completed = 0, agreed = 0, guti_path = 0;
  for (std::size_t i = 0; i < f.sessions; ++i) {
    const std::size_t ue = i % kSubscribers;
    sim::SessionMode mode = sim::SessionMode::kSupi;
    if (f.mode == "guti") mode = sim::SessionMode::kGuti;
    if (f.mode == "mixed" && (coin() & 1)) mode = sim::SessionMode::kGuti;

    const auto r = sim::run_session(world, ue, 0, sim::in_mode(mode));
    const auto& o = r.outcome;
    completed += o.completed;
    agreed += o.keys_agree();
    guti_path += o.completed && o.path == IdentificationPath::kGuti;

    nlohmann::json j{{"session", i},
                     {"ue", ue},
                     {"mode", mode == sim::SessionMode::kGuti ? "guti" : "supi"},
                     {"path", o.path == IdentificationPath::kGuti ? "guti" : "supi"},
                     {"completed", o.completed},
                     {"keys_agree", o.keys_agree()},
                     {"hn_confirmed", o.hn_confirmed},
                     {"aborted_at", o.aborted_at}};
    auto& msgs = j["messages"] = nlohmann::json::array();
    std::stringstream lines(r.transcript.to_jsonl());
    for (std::string line; std::getline(lines, line);) {
      if (!line.empty()) msgs.push_back(nlohmann::json::parse(line));
    }
    log += j.dump() + '\n';
  }
  write_file(f.out, log);

  out << format_table({"suite", "sessions", "completed", "keys_agree", "guti_path", "seed"},
                      {{std::string(suite->name()), std::to_string(f.sessions),
                        std::to_string(completed), std::to_string(agreed),
                        std::to_string(guti_path), std::to_string(f.seed)}});
  return completed == f.sessions && agreed == f.sessions ? kExitOk : kExitFailure;
}

int cmd_attack(const Flags& f, std::ostream& out) {
  std::vector<std::string> names;
  if (f.scenario == "all") {
    names = attacks::scenario_names();
  } else {
    const auto& all = attacks::scenario_names();
    if (std::find(all.begin(), all.end(), f.scenario) == all.end()) {
      throw UsageError("unknown scenario '" + f.scenario + "'; expected one of: " + join(all) +
                       ", all");
    }
    names = {f.scenario};
  }
  attacks::ScenarioConfig cfg;
  cfg.suite = single_suite(f.kem);
  cfg.seed = f.seed;
  cfg.ue_hooks.skip_mac_check = f.skip_ue_mac_check;

  std::vector<std::vector<std::string>> checks, controls;
  std::string jsonl;
  bool all_hold = true;
  for (const auto& name : names) {
    const auto report = attacks::run_scenario(name, cfg);
    all_hold &= report.holds();
    jsonl += report.to_jsonl();
    for (const auto& v : report.checks) {
      checks.push_back({v.scenario, v.check, v.holds ? "holds" : "FAILS", v.detail});
    }
    for (const auto& v : report.controls) {
      controls.push_back({v.scenario, v.check, v.holds ? "holds" : "fails",
                          v.as_expected() ? "as expected" : "UNEXPECTED", v.detail});
    }
  }
  write_file(f.out, jsonl);

  out << "checks\n" << format_table({"scenario", "check", "verdict", "detail"}, checks);
  out << "\nnegative controls (not part of the exit status)\n"
      << format_table({"scenario", "control", "verdict", "expectation", "detail"}, controls);
  out << "\n" << (all_hold ? "all checks hold" : "SOME CHECKS FAIL") << " (suite "
      << cfg.suite->name() << ", seed " << f.seed << ")\n";
  return all_hold ? kExitOk : kExitFailure;
}

std::vector<std::string> report_suites(const Flags& f) {
  if (f.kem.empty()) return crypto::known_kem_names();
  auto names = split_list(f.kem);
  if (names.empty()) throw UsageError("--kem needs at least one suite name");
  for (const auto& n : names) {
    if (!is_known(n)) unknown_suite(n);
  }
  return names;
}

int cmd_bench(const Flags& f, std::ostream& out) {
  if (f.iters == 0) throw UsageError("--iters must be positive");
  std::vector<BenchRow> rows;
  for (const auto& name : report_suites(f)) rows.push_back(bench_by_name(name, f.iters, f.seed));
  print_bench(out, rows);
  write_file(f.out, bench_jsonl(rows));
  return kExitOk;
}

int cmd_sizes(const Flags& f, std::ostream& out) {
  std::vector<SizeRow> rows;
  for (const auto& name : report_suites(f)) rows.push_back(size_by_name(name, f.seed));
  print_sizes(out, rows);
  write_file(f.out, sizes_jsonl(rows));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Post-quantum 5G AKA simulator, attack harness and reports", "pqaka"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* cmd, const std::string& kem_help) {
    cmd->add_option("--kem", f.kem, kem_help);
    cmd->add_option("--seed", f.seed, "RNG seed");
    cmd->add_option("--out", f.out, "write line-delimited JSON records here");
    cmd->add_option("--config", f.config, "JSON file with defaults for these flags")
        ->check(CLI::ExistingFile);
  };

  auto* run_cmd = app.add_subcommand("run", "run seeded honest sessions and write transcripts");
  common(run_cmd, "KEM suite (default test)");
  run_cmd->add_option("--sessions", f.sessions, "number of sessions");
  run_cmd->add_option("--mode", f.mode, "identification mode")
      ->check(CLI::IsMember({"supi", "guti", "mixed"}));
  run_cmd->add_flag("--unsafe-skip-ue-mac-check", f.skip_ue_mac_check)->group("");

  auto* attack_cmd = app.add_subcommand("attack", "run attack scenarios");
  attack_cmd->add_option("scenario", f.scenario,
                         "replay, linkability, sn-binding, forward-secrecy or all")
      ->required();
  common(attack_cmd, "KEM suite (default test)");
  attack_cmd->add_flag("--unsafe-skip-ue-mac-check", f.skip_ue_mac_check)->group("");

  auto* bench_cmd = app.add_subcommand("bench", "time the per-party KEM work");
  common(bench_cmd, "comma-separated suites (default all)");
  bench_cmd->add_option("--iters", f.iters, "timed iterations per suite");

  auto* sizes_cmd = app.add_subcommand("sizes", "key, ciphertext and message sizes");
  common(sizes_cmd, "comma-separated suites (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    apply_config(*cmd, f);
    if (cmd == run_cmd || cmd == attack_cmd) {
      if (f.kem.empty()) f.kem = "test";
    }
    if (cmd == run_cmd) return cmd_run(f, out);
    if (cmd == attack_cmd) return cmd_attack(f, out);
    if (cmd == bench_cmd) return cmd_bench(f, out);
    return cmd_sizes(f, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SuiteUnavailable& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace pqaka::cli
