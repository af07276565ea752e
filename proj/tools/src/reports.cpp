#include "pqaka_cli/reports.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "pqaka/errors.hpp"
#include "pqaka/random.hpp"
#include "pqaka/sim.hpp"

namespace pqaka::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mad(const std::vector<double>& v, double m) {
  std::vector<double> d;
  d.reserve(v.size());
  for (double x : v) d.push_back(std::fabs(x - m));
  return median(std::move(d));
}

std::string fixed(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

}  // namespace

BenchRow bench_suite(const crypto::KemSuite& suite, std::size_t iterations, std::uint64_t seed) {
  BenchRow row;
  row.suite = suite.name();
  row.available = true;
  row.iterations = iterations;

  SeededRandom rng(seed);
  const auto hn = suite.keygen(rng);
  std::vector<double> ue_ms, hn_ms;
  ue_ms.reserve(iterations);
  hn_ms.reserve(iterations);

  for (std::size_t i = 0; i <= iterations; ++i) {  // iteration 0 warms caches
    auto t0 = Clock::now();
    const auto ue = suite.keygen(rng);
    const auto c1 = suite.encaps(hn.pk, rng);
    double ue_t = ms_since(t0);

    t0 = Clock::now();
    const auto k1 = suite.decaps(hn.sk, c1.ct);
    const auto c2 = suite.encaps(ue.pk, rng);
    const double hn_t = ms_since(t0);

    t0 = Clock::now();
    const auto k2 = suite.decaps(ue.sk, c2.ct);
    ue_t += ms_since(t0);

    if (!k1 || !k2 || *k1 != c1.key || *k2 != c2.key) {
      throw Error("suite " + std::string(suite.name()) + " failed a KEM round trip while benchmarking");
    }
    if (i == 0) continue;
    ue_ms.push_back(ue_t);
    hn_ms.push_back(hn_t);
  }
  row.ue_cost_ms = median(ue_ms);
  row.hn_cost_ms = median(hn_ms);
  row.ue_mad_ms = mad(ue_ms, row.ue_cost_ms);
  row.hn_mad_ms = mad(hn_ms, row.hn_cost_ms);
  return row;
}

BenchRow bench_by_name(const std::string& name, std::size_t iterations, std::uint64_t seed) {
  try {
    return bench_suite(*crypto::find_kem(name), iterations, seed);
  } catch (const SuiteUnavailable& e) {
    BenchRow row;
    row.suite = name;
    row.note = e.what();
    return row;
  }
}

SizeRow size_by_name(const std::string& name, std::uint64_t seed) {
  SizeRow row;
  row.suite = name;
  crypto::KemHandle suite;
  try {
    suite = crypto::find_kem(name);
  } catch (const SuiteUnavailable& e) {
    row.note = e.what();
    return row;
  }
  row.available = true;
  row.kem = suite->sizes();

  sim::World world(suite, seed);
  world.add_serving_network();
  world.add_subscriber("imsi-001010000000001");
  const auto r = sim::run_session(world, 0, 0);
  for (const auto& e : r.transcript.entries()) {
    switch (wire::peek_type(e.bytes).value_or(wire::MessageType::kHnAbort)) {
      case wire::MessageType::kIdResponse: row.id_response = e.bytes.size(); break;
      case wire::MessageType::kHnToSnAuth: row.hn_to_sn_auth = e.bytes.size(); break;
      case wire::MessageType::kChallenge: row.challenge = e.bytes.size(); break;
      case wire::MessageType::kResponse: row.response = e.bytes.size(); break;
      default: break;
    }
  }
  return row;
}

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      s += cell;
      if (c + 1 < width.size()) s += std::string(width[c] - cell.size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + '\n';
  };
  std::string out = line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  out += line(rule);
  for (const auto& r : rows) out += line(r);
  return out;
}

void print_bench(std::ostream& out, const std::vector<BenchRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    if (!r.available) {
      cells.push_back({r.suite, "unavailable", "", "", "", ""});
      continue;
    }
    cells.push_back({r.suite, fixed(r.ue_cost_ms), fixed(r.ue_mad_ms), fixed(r.hn_cost_ms),
                     fixed(r.hn_mad_ms), std::to_string(r.iterations)});
  }
  out << format_table({"suite", "ue_ms", "ue_mad", "hn_ms", "hn_mad", "iters"}, cells);
}

void print_sizes(std::ostream& out, const std::vector<SizeRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    if (!r.available) {
      cells.push_back({r.suite, "unavailable"});
      continue;
    }
    cells.push_back({r.suite, std::to_string(r.kem.sk), std::to_string(r.kem.pk),
                     std::to_string(r.kem.ct), std::to_string(r.kem.key),
                     std::to_string(r.id_response), std::to_string(r.hn_to_sn_auth),
                     std::to_string(r.challenge), std::to_string(r.response)});
  }
  out << format_table({"suite", "sk", "pk", "ct", "key", "id_response", "hn_to_sn_auth",
                       "challenge", "response"},
                      cells);
}

std::string bench_jsonl(const std::vector<BenchRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    nlohmann::json j{{"suite", r.suite}, {"available", r.available}};
    if (r.available) {
      j.update({{"ue_cost_ms", r.ue_cost_ms},
                {"hn_cost_ms", r.hn_cost_ms},
                {"ue_mad_ms", r.ue_mad_ms},
                {"hn_mad_ms", r.hn_mad_ms},
                {"iterations", r.iterations}});
    } else {
      j["note"] = r.note;
    }
    out += j.dump() + '\n';
  }
  return out;
}

std::string sizes_jsonl(const std::vector<SizeRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    nlohmann::json j{{"suite", r.suite}, {"available", r.available}};
    if (r.available) {
      j.update({{"sk_len", r.kem.sk},
                {"pk_len", r.kem.pk},
                {"ct_len", r.kem.ct},
                {"key_len", r.kem.key},
                {"id_response", r.id_response},
                {"hn_to_sn_auth", r.hn_to_sn_auth},
                {"challenge", r.challenge},
                {"response", r.response}});
    } else {
      j["note"] = r.note;
    }
    out += j.dump() + '\n';
  }
  return out;
}

}  // namespace pqaka::cli
