#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "pqaka/persistence.hpp"
#include "pqaka/sim.hpp"

using namespace pqaka;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "pqaka_persistence_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST(Persistence, LinesRoundTripAndSkipBlanks) {
  const auto p = scratch("lines.jsonl");
  EXPECT_TRUE(persistence::read_lines(p).empty());
  persistence::write_lines_atomic(p, {"a", "b"});
  {
    std::ofstream out(p, std::ios::app);
    out << "\n\nc\n";
  }
  EXPECT_EQ(persistence::read_lines(p), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_FALSE(fs::exists(p.string() + ".tmp"));
}

TEST(Persistence, RegistryAndGutiTableSurviveARestart) {
  const auto reg = scratch("registry.jsonl");
  const auto tab = scratch("guti.jsonl");
  sim::World w(crypto::make_test_kem(), 3);
  w.add_serving_network();
  w.add_subscriber("imsi-001010000000001");
  w.hn().set_registry_path(reg);
  w.sn(0).set_table_path(tab);
  ASSERT_TRUE(sim::run_session(w, 0, 0).outcome.keys_agree());
  ASSERT_TRUE(fs::exists(reg));
  ASSERT_TRUE(fs::exists(tab));

  HnState fresh;
  fresh.kem_pair = w.hn().state().kem_pair;
  HomeNetwork restored(fresh, crypto::make_test_kem());
  restored.load_registry(reg);
  const auto* rec = restored.find_subscriber("imsi-001010000000001");
  ASSERT_TRUE(rec);
  EXPECT_EQ(rec->k, w.ue(0).long_term_key());
  EXPECT_EQ(rec->k_s, w.ue(0).state().k_s);

  ServingNetwork sn2(w.sn(0).id());
  sn2.load_guti_table(tab);
  EXPECT_EQ(sn2.state().guti_table, w.sn(0).state().guti_table);
}
