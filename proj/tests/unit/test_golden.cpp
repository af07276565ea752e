#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "pqaka/sim.hpp"

using namespace pqaka;

namespace {

struct Golden {
  std::vector<std::pair<std::string, Bytes>> messages;
  nlohmann::json keys;
};

Golden load() {
  Golden g;
  std::ifstream in(std::string(PQAKA_FIXTURE_DIR) + "/golden_test_seed0.jsonl");
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    if (j["name"] == "keys") {
      g.keys = j;
    } else {
      g.messages.emplace_back(j["name"].get<std::string>(), from_hex(j["hex"].get<std::string>()));
    }
  }
  return g;
}

/// Encoded messages of one session keyed by "<prefix>.<type>", with the
/// GUTI assignment recovered from the UE's state.
void collect(std::map<std::string, Bytes>& out, const std::string& prefix,
             const sim::SessionResult& r, const UeState& ue) {
  for (const auto& e : r.transcript.entries()) {
    out[prefix + "." + std::string(wire::type_name(*wire::peek_type(e.bytes)))] = e.bytes;
  }
  out[prefix + ".GutiAssign"] = wire::encode(wire::GutiAssignMsg{*ue.guti, *ue.r_sn_prime});
}

}  // namespace

TEST(Golden, FixtureCoversEveryMessageType) {
  const auto g = load();
  std::set<std::uint8_t> types;
  for (const auto& [name, bytes] : g.messages) types.insert(bytes.at(0));
  EXPECT_EQ(types.size(), 12u);
}

TEST(Golden, EveryVectorRoundTripsBitIdentically) {
  for (const auto& [name, bytes] : load().messages) {
    EXPECT_EQ(wire::encode(wire::decode(bytes)), bytes) << name;
  }
}

TEST(Golden, SeededSessionsReproduceTheOracle) {
  const auto g = load();
  ASSERT_FALSE(g.messages.empty());

  sim::World w(crypto::make_test_kem(), 0);
  w.add_serving_network();
  w.add_subscriber("imsi-001010000000001", SharedKey256{});
  std::map<std::string, Bytes> ours;
  const auto supi = sim::run_session(w, 0, 0);
  collect(ours, "supi", supi, w.ue(0).state());
  const auto guti = sim::run_session(w, 0, 0, sim::in_mode(sim::SessionMode::kGuti));
  collect(ours, "guti", guti, w.ue(0).state());
  ours["HnAbort"] = wire::encode(wire::HnAbortMsg{});

  for (const auto& [name, bytes] : g.messages) {
    ASSERT_TRUE(ours.contains(name)) << name;
    EXPECT_EQ(to_hex(ours[name]), to_hex(bytes)) << name;
  }
  EXPECT_EQ(to_hex(*supi.outcome.ue_k_seaf), g.keys["supi_k_seaf"]);
  EXPECT_EQ(to_hex(*guti.outcome.ue_k_seaf), g.keys["guti_k_seaf"]);
  EXPECT_EQ(to_hex(*w.ue(0).state().k_s), g.keys["k_s_after_guti"]);
}
