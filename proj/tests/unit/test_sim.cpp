#include <gtest/gtest.h>

#include <sstream>

#include "pqaka/errors.hpp"
#include "pqaka/sim.hpp"

using namespace pqaka;
using namespace pqaka::sim;
using wire::MessageType;

namespace {

World make_world(std::uint64_t seed, std::size_t subscribers = 1,
                 const std::string& kem = "test") {
  World w(crypto::find_kem(kem), seed);
  w.add_serving_network();
  for (std::size_t i = 0; i < subscribers; ++i) {
    w.add_subscriber("imsi-00101000000000" + std::to_string(i + 1));
  }
  return w;
}

SharedKey256 hn_k_s(const World& w, std::size_t ue) {
  return *w.hn().find_subscriber(w.ue(ue).state().supi)->k_s;
}

}  // namespace

TEST(Sim, HonestSupiSessionHasEightMessagesAndAgrees) {
  auto w = make_world(1);
  const auto r = run_session(w, 0, 0);
  EXPECT_TRUE(r.outcome.completed);
  EXPECT_TRUE(r.outcome.keys_agree());
  EXPECT_TRUE(r.outcome.hn_confirmed);
  EXPECT_TRUE(r.outcome.assignment_applied);
  EXPECT_EQ(r.outcome.path, IdentificationPath::kSupi);
  EXPECT_EQ(*r.outcome.sn_supi, w.ue(0).state().supi);
  EXPECT_EQ(r.transcript.size(), 8u);
  EXPECT_EQ(r.transcript.count(ChannelKind::kRadio), 5u);
  EXPECT_EQ(r.transcript.count(ChannelKind::kCore), 3u);
  EXPECT_EQ(*w.ue(0).state().k_s, hn_k_s(w, 0));
}

TEST(Sim, GutiChainKeepsRatchetInStep) {
  auto w = make_world(2);
  ASSERT_TRUE(run_session(w, 0, 0).outcome.keys_agree());
  std::vector<SharedKey256> seen{hn_k_s(w, 0)};
  for (int i = 0; i < 5; ++i) {
    const auto r = run_session(w, 0, 0, in_mode(SessionMode::kGuti));
    ASSERT_TRUE(r.outcome.keys_agree()) << i;
    EXPECT_EQ(r.outcome.path, IdentificationPath::kGuti);
    EXPECT_EQ(r.transcript.size(), 7u);
    EXPECT_FALSE(r.transcript.find(MessageType::kIdResponse));
    EXPECT_EQ(*w.ue(0).state().k_s, hn_k_s(w, 0));
    EXPECT_EQ(std::count(seen.begin(), seen.end(), hn_k_s(w, 0)), 0);
    seen.push_back(hn_k_s(w, 0));
  }
}

TEST(Sim, LostConfirmationKeepsTheOldRatchetUsable) {
  auto w = make_world(3);
  ASSERT_TRUE(run_session(w, 0, 0).outcome.completed);
  const auto before = hn_k_s(w, 0);
  const auto guti = *w.ue(0).state().guti;

  SessionOptions lost = in_mode(SessionMode::kGuti);
  lost.lose_hn_confirmation = true;
  const auto r = run_session(w, 0, 0, lost);
  EXPECT_TRUE(r.outcome.completed);
  EXPECT_FALSE(r.outcome.hn_confirmed);
  EXPECT_FALSE(r.outcome.assignment_applied);
  EXPECT_EQ(hn_k_s(w, 0), before);
  EXPECT_EQ(*w.ue(0).state().k_s, before);
  EXPECT_EQ(*w.ue(0).state().guti, guti);

  const auto again = run_session(w, 0, 0, in_mode(SessionMode::kGuti));
  EXPECT_TRUE(again.outcome.keys_agree());
  EXPECT_EQ(again.outcome.path, IdentificationPath::kGuti);
  EXPECT_EQ(*w.ue(0).state().k_s, hn_k_s(w, 0));
}

TEST(Sim, DroppedAssignmentFallsBackToSupi) {
  auto w = make_world(4);
  ASSERT_TRUE(run_session(w, 0, 0).outcome.completed);
  Attacker a;
  a.tap(ChannelKind::kRadio, Attacker::drop_type(MessageType::kSecured));
  const auto r = run_session(w, 0, 0, in_mode(SessionMode::kGuti), &a);
  EXPECT_TRUE(r.outcome.completed);
  EXPECT_FALSE(r.outcome.assignment_applied);

  const auto next = run_session(w, 0, 0, in_mode(SessionMode::kGuti));
  EXPECT_TRUE(next.outcome.keys_agree());
  EXPECT_EQ(next.outcome.path, IdentificationPath::kSupi);
  EXPECT_TRUE(next.transcript.find(MessageType::kGutiId));
  EXPECT_EQ(*w.ue(0).state().k_s, hn_k_s(w, 0));
}

TEST(Sim, GutiModeWithoutGutiUsesSupi) {
  auto w = make_world(5);
  const auto r = run_session(w, 0, 0, in_mode(SessionMode::kGuti));
  EXPECT_TRUE(r.outcome.keys_agree());
  EXPECT_EQ(r.outcome.path, IdentificationPath::kSupi);
}

TEST(Sim, CoreChannelCannotBeTapped) {
  Attacker a;
  EXPECT_THROW(a.tap(ChannelKind::kCore, Attacker::drop_type(MessageType::kConfirm)),
               ThreatModelViolation);
}

TEST(Sim, TamperedChallengeAbortsAtTheUe) {
  auto w = make_world(6);
  Attacker a;
  a.tap(ChannelKind::kRadio, Attacker::tamper_type(MessageType::kChallenge, [](ByteView b) {
          Bytes t(b.begin(), b.end());
          t[10] ^= 1;
          return t;
        }));
  const auto r = run_session(w, 0, 0, {}, &a);
  EXPECT_FALSE(r.outcome.completed);
  EXPECT_EQ(r.outcome.aborted_at, "ue-challenge");
  EXPECT_EQ(r.outcome.ue_abort, UeAbort::kMacMismatch);
  EXPECT_FALSE(r.transcript.find(MessageType::kResponse));
  const auto* ch = r.transcript.find(MessageType::kChallenge);
  ASSERT_TRUE(ch);
  EXPECT_TRUE(ch->delivered_bytes);
  EXPECT_TRUE(w.sn(0).state().pending.empty());
}

TEST(Sim, GarbledMessageIsRejectedByTheParser) {
  auto w = make_world(7);
  Attacker a;
  a.tap(ChannelKind::kRadio,
        Attacker::replace_type(MessageType::kIdResponse, Bytes{0x02, 0, 0}));
  const auto r = run_session(w, 0, 0, {}, &a);
  EXPECT_EQ(r.outcome.aborted_at, "sn-receive-id-response");
}

TEST(Sim, AttackerRecordsObservedTrafficAndCompromises) {
  auto w = make_world(8);
  Attacker a;
  run_session(w, 0, 0, {}, &a);
  EXPECT_EQ(a.observed().size(), 5u);
  const auto ue = a.compromise(CompromiseTarget::kUeLongTermKey, w);
  EXPECT_EQ(ue.secrets.size(), 1u);
  const auto reg = a.compromise(CompromiseTarget::kHnRegistry, w);
  EXPECT_TRUE(reg.secrets.contains("K_S:" + w.ue(0).state().supi));
  const auto sn = a.compromise(CompromiseTarget::kSnSessionKeys, w);
  EXPECT_EQ(sn.secrets.size(), 1u);
  EXPECT_EQ(a.compromised().size(), 3u);
}

TEST(Sim, TranscriptSerializesOneRecordPerMessage) {
  auto w = make_world(9);
  const auto r = run_session(w, 0, 0);
  std::stringstream ss(r.transcript.to_jsonl());
  std::size_t lines = 0;
  for (std::string line; std::getline(ss, line);) ++lines;
  EXPECT_EQ(lines, r.transcript.size());
}

TEST(Sim, SeededWorldsAreReproducible) {
  auto a = make_world(10);
  auto b = make_world(10);
  EXPECT_EQ(run_session(a, 0, 0).transcript.to_jsonl(), run_session(b, 0, 0).transcript.to_jsonl());
}

TEST(Sim, InvalidIndicesAreUsageErrors) {
  auto w = make_world(11);
  EXPECT_THROW(run_session(w, 1, 0), UsageError);
  EXPECT_THROW(run_session(w, 0, 1), UsageError);
}

TEST(Sim, MultipleSubscribersInterleave) {
  auto w = make_world(12, 3);
  for (int round = 0; round < 3; ++round) {
    for (std::size_t u = 0; u < 3; ++u) {
      EXPECT_TRUE(run_session(w, u, 0, in_mode(SessionMode::kGuti)).outcome.keys_agree());
    }
  }
}

TEST(Sim, RealBackendSessionsAgree) {
  for (const auto& name : {"kyber", "hqc", "bike", "ecies-x25519", "ecies-p256"}) {
    if (!crypto::kem_available(name)) continue;
    auto w = make_world(13, 1, name);
    EXPECT_TRUE(run_session(w, 0, 0).outcome.keys_agree()) << name;
    EXPECT_TRUE(run_session(w, 0, 0, in_mode(SessionMode::kGuti)).outcome.keys_agree()) << name;
  }
}
