#include <gtest/gtest.h>

#include "pqaka/closure.hpp"
#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/sim.hpp"

using namespace pqaka;
using namespace pqaka::attacks;

namespace {

struct HonestRun {
  sim::World world{crypto::make_test_kem(), 21};
  sim::SessionResult result;
  HonestRun() {
    world.add_serving_network();
    world.add_subscriber("imsi-001010000000001");
    result = sim::run_session(world, 0, 0);
  }
  SharedKey256 k_seaf() const { return *result.outcome.ue_k_seaf; }
};

}  // namespace

TEST(Closure, EavesdropperAloneLearnsNoSessionKey) {
  HonestRun run;
  Knowledge k;
  learn_radio(k, run.result.transcript);
  const auto stats = close(k, run.world.suite(), 4);
  EXPECT_TRUE(stats.saturated);
  EXPECT_FALSE(k.contains_value(run.k_seaf()));
  EXPECT_FALSE(k.contains_value(as_bytes(run.world.ue(0).state().supi)));
}

TEST(Closure, LongTermKeyAloneIsNotEnough) {
  HonestRun run;
  Knowledge k;
  learn_radio(k, run.result.transcript);
  k.add(Kind::kLongTermKey, run.world.ue(0).long_term_key());
  k.add(Kind::kKemSecretKey, run.world.hn().secret_key());
  close(k, run.world.suite(), 4);
  EXPECT_FALSE(k.contains(Kind::kKseaf, run.k_seaf()));
}

namespace {

/// K, ID_SN and K_s2 (recomputed with the test KEM from pk_U and c2).
Knowledge leaked_session_secret(const HonestRun& run) {
  Knowledge k;
  learn_radio(k, run.result.transcript);
  k.add(Kind::kLongTermKey, run.world.ue(0).long_term_key());
  k.add(Kind::kIdSn, as_bytes(run.world.sn(0).id()));
  const auto* ch = run.result.transcript.find(wire::MessageType::kChallenge);
  const auto c2 = *wire::decode_as<wire::ChallengeMsg>(ch->bytes).c2;
  Knowledge opened = k;
  opened.add(Kind::kKemSecretKey, run.world.hn().secret_key());
  close(opened, run.world.suite(), 2);
  const auto pk_u = opened.of(Kind::kKemPublicKey);
  EXPECT_EQ(pk_u.size(), 1u);
  k.add(Kind::kKemSecret, crypto::hash_h({pk_u.at(0), c2}));
  return k;
}

}  // namespace

TEST(Closure, LongTermKeyPlusSessionSecretDerivesKseaf) {
  HonestRun run;
  Knowledge k = leaked_session_secret(run);
  const auto stats = close(k, run.world.suite(), 4);
  EXPECT_TRUE(k.contains(Kind::kKseaf, run.k_seaf()));
  EXPECT_EQ(*k.depth_of(run.k_seaf()), 3u);
  EXPECT_GT(stats.aead_attempts, 0u);
}

TEST(Closure, DepthBoundLimitsDerivations) {
  HonestRun run;
  Knowledge k = leaked_session_secret(run);
  const auto stats = close(k, run.world.suite(), 2);
  EXPECT_EQ(stats.rounds, 2u);
  EXPECT_FALSE(k.contains(Kind::kKseaf, run.k_seaf()));
  EXPECT_TRUE(k.contains(Kind::kKausf, run.world.ue(0).state().session_keys->k_ausf));
}

TEST(Closure, KnowledgeTracksTypesAndDepth) {
  Knowledge k;
  const Bytes v{1, 2, 3};
  EXPECT_TRUE(k.add(Kind::kRsn, v, 2));
  EXPECT_FALSE(k.add(Kind::kRsn, v, 3));
  EXPECT_TRUE(k.add(Kind::kConc, v, 1));
  EXPECT_TRUE(k.contains(Kind::kRsn, v));
  EXPECT_FALSE(k.contains(Kind::kAk, v));
  EXPECT_EQ(*k.depth_of(v), 1u);
  EXPECT_EQ(k.size(), 2u);
  EXPECT_EQ(to_string(Kind::kKseaf), "K_seaf");
}
