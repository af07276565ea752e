#include <gtest/gtest.h>

#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/sim.hpp"

using namespace pqaka;

namespace {

constexpr const char* kSupi = "imsi-001010000000001";

struct Fixture {
  sim::World world{crypto::make_test_kem(), 5};
  Fixture() {
    world.add_serving_network();
    world.add_subscriber(kSupi);
    ue().attach(sn().id());
  }
  UserEquipment& ue() { return world.ue(0); }
  ServingNetwork& sn() { return world.sn(0); }
  HomeNetwork& hn() { return world.hn(); }
  RandomSource& rng() { return world.rng(); }
};

}  // namespace

TEST(Parties, ManualSupiFlowAgreesOnKseaf) {
  Fixture f;
  const auto resp = f.ue().identification_response(f.rng());
  auto fwd = f.sn().forward_identification(resp, f.rng());

  const auto who = f.hn().identify(fwd.message, f.sn().id());
  ASSERT_TRUE(who);
  EXPECT_EQ(who->supi, kSupi);
  EXPECT_EQ(who->pk_u, f.ue().state().ephemeral->pk);

  Block256 hn_sid{};
  const auto reply = f.hn().handle_request(fwd.message, f.sn().id(), f.rng(), hn_sid);
  EXPECT_EQ(hn_sid, fwd.session_id);
  const auto& vec = std::get<wire::HnToSnAuthMsg>(reply);
  ASSERT_TRUE(vec.c2);

  const auto challenge = f.sn().forward_challenge(fwd.session_id, vec);
  ASSERT_TRUE(challenge);
  const auto res = f.ue().process_challenge(*challenge);
  ASSERT_TRUE(res);
  EXPECT_FALSE(f.ue().state().ephemeral);

  const auto verified = f.sn().verify_response(fwd.session_id, *res);
  ASSERT_TRUE(verified);
  EXPECT_EQ(verified->supi, kSupi);
  EXPECT_EQ(verified->k_seaf, f.ue().state().session_keys->k_seaf);
  EXPECT_EQ(f.hn().state().pending.at(hn_sid).k_seaf, verified->k_seaf);
}

TEST(Parties, SuciPlaintextCarriesSupiPkAndSnIdentity) {
  const Bytes pt = suci_plaintext("imsi-1", Bytes{1, 2, 3}, "sn-a");
  const auto back = parse_suci_plaintext(pt);
  ASSERT_TRUE(back);
  EXPECT_EQ(back->supi, "imsi-1");
  EXPECT_EQ(back->pk_u, (Bytes{1, 2, 3}));
  EXPECT_EQ(back->id_sn, "sn-a");
  Bytes trailing = pt;
  trailing.push_back(0);
  EXPECT_FALSE(parse_suci_plaintext(trailing));
}

TEST(Parties, HnRejectsTamperedIdentification) {
  Fixture f;
  const auto resp = f.ue().identification_response(f.rng());
  const auto fwd = f.sn().forward_identification(resp, f.rng());

  auto bad_mac = fwd.message;
  bad_mac.mac_u[3] ^= 1;
  EXPECT_FALSE(f.hn().identify(bad_mac, f.sn().id()));

  auto bad_ct = fwd.message;
  bad_ct.suci_conc[0] ^= 1;
  EXPECT_FALSE(f.hn().identify(bad_ct, f.sn().id()));

  auto short_c1 = fwd.message;
  short_c1.c1.pop_back();
  EXPECT_FALSE(f.hn().identify(short_c1, f.sn().id()));

  EXPECT_FALSE(f.hn().identify(fwd.message, "5G:other"));
  EXPECT_TRUE(f.hn().identify(fwd.message, f.sn().id()));
}

TEST(Parties, HnAnswersEveryFailureWithTheSameAbort) {
  Fixture f;
  const auto resp = f.ue().identification_response(f.rng());
  auto fwd = f.sn().forward_identification(resp, f.rng());
  fwd.message.mac_u[0] ^= 1;
  Block256 sid{};
  const auto reply = f.hn().handle_request(fwd.message, f.sn().id(), f.rng(), sid);
  EXPECT_TRUE(std::holds_alternative<wire::HnAbortMsg>(reply));
  EXPECT_EQ(wire::encode(reply), Bytes{0x0c});
  EXPECT_TRUE(std::holds_alternative<wire::HnAbortMsg>(
      f.hn().handle_request(wire::ResponseMsg{}, f.sn().id(), f.rng(), sid)));
}

TEST(Parties, UnknownSubscriberIsRejected) {
  sim::World w(crypto::make_test_kem(), 1);
  w.add_serving_network();
  w.add_subscriber(kSupi);
  UeState st = w.ue(0).state();
  st.supi = "imsi-999";
  UserEquipment stranger(st, crypto::make_test_kem());
  stranger.attach(w.sn(0).id());
  const auto fwd = w.sn(0).forward_identification(stranger.identification_response(w.rng()), w.rng());
  EXPECT_FALSE(w.hn().identify(fwd.message, w.sn(0).id()));
}

TEST(Parties, SnRejectsWrongResStarAndForgetsTheSession) {
  Fixture f;
  const auto fwd =
      f.sn().forward_identification(f.ue().identification_response(f.rng()), f.rng());
  Block256 sid{};
  const auto reply = f.hn().handle_request(fwd.message, f.sn().id(), f.rng(), sid);
  ASSERT_TRUE(f.sn().forward_challenge(fwd.session_id, std::get<wire::HnToSnAuthMsg>(reply)));
  wire::ResponseMsg wrong{};
  EXPECT_FALSE(f.sn().verify_response(fwd.session_id, wrong));
  EXPECT_FALSE(f.sn().state().pending.contains(fwd.session_id));
}

TEST(Parties, SnRejectsVectorOfTheWrongPath) {
  Fixture f;
  const auto fwd =
      f.sn().forward_identification(f.ue().identification_response(f.rng()), f.rng());
  wire::HnToSnAuthMsg no_c2{wire::Autn{}, Block256{}, Bytes{1}, std::nullopt};
  EXPECT_FALSE(f.sn().forward_challenge(fwd.session_id, no_c2));
}

TEST(Parties, UeIgnoresChallengesOutsideASession) {
  Fixture f;
  EXPECT_FALSE(f.ue().process_challenge(wire::ChallengeMsg{wire::Autn{}, Bytes(32)}));
  EXPECT_EQ(f.ue().last_abort(), UeAbort::kNoSession);

  f.ue().identification_response(f.rng());
  EXPECT_FALSE(f.ue().process_challenge(wire::ChallengeMsg{wire::Autn{}, std::nullopt}));
  EXPECT_EQ(f.ue().last_abort(), UeAbort::kPathMismatch);
}

TEST(Parties, UeRejectsForgedMacWithoutResponding) {
  Fixture f;
  const auto fwd =
      f.sn().forward_identification(f.ue().identification_response(f.rng()), f.rng());
  Block256 sid{};
  auto vec = std::get<wire::HnToSnAuthMsg>(f.hn().handle_request(fwd.message, f.sn().id(), f.rng(), sid));
  vec.autn.mac[31] ^= 0x01;
  EXPECT_FALSE(f.ue().process_challenge(wire::ChallengeMsg{vec.autn, vec.c2}));
  EXPECT_EQ(f.ue().last_abort(), UeAbort::kMacMismatch);
  EXPECT_FALSE(f.ue().state().session_keys);
  EXPECT_FALSE(f.ue().state().k_s_pending);
}

TEST(Parties, HnFinalizeNeedsAKnownSessionAndAPositiveConfirm) {
  Fixture f;
  EXPECT_FALSE(f.hn().finalize(wire::ConfirmMsg{true}, Block256{}));
  const auto fwd =
      f.sn().forward_identification(f.ue().identification_response(f.rng()), f.rng());
  Block256 sid{};
  f.hn().handle_request(fwd.message, f.sn().id(), f.rng(), sid);
  EXPECT_FALSE(f.hn().finalize(wire::ConfirmMsg{false}, sid));
  EXPECT_FALSE(f.hn().find_subscriber(kSupi)->k_s);
  EXPECT_TRUE(f.hn().finalize(wire::ConfirmMsg{true}, sid));
  EXPECT_TRUE(f.hn().find_subscriber(kSupi)->k_s);
  EXPECT_FALSE(f.hn().finalize(wire::ConfirmMsg{true}, sid));
}

TEST(Parties, SnAssignsFreshGutisAndDropsTheOldOne) {
  ServingNetwork sn("5G:x");
  SeededRandom rng(1);
  const auto a = sn.assign_guti("imsi-1", rng);
  const auto b = sn.assign_guti("imsi-1", rng);
  EXPECT_NE(a.guti_new, b.guti_new);
  EXPECT_FALSE(sn.state().guti_table.contains(a.guti_new));
  EXPECT_EQ(sn.state().guti_table.at(b.guti_new).supi, "imsi-1");
  EXPECT_TRUE(std::holds_alternative<wire::IdRequestMsg>(sn.resolve_guti({a.guti_new}, rng)));
}

TEST(Parties, UeCommitsRatchetOnlyOnAssignment) {
  Fixture f;
  auto r = sim::run_session(f.world, 0, 0, sim::in_mode(sim::SessionMode::kSupi));
  ASSERT_TRUE(r.outcome.assignment_applied);
  const auto k_s = *f.ue().state().k_s;

  f.ue().attach(f.sn().id());
  const auto gid = f.ue().guti_identification();
  ASSERT_TRUE(gid);
  auto fwd = std::get<ForwardedGuti>(f.sn().resolve_guti(*gid, f.rng()));
  Block256 sid{};
  const auto vec = std::get<wire::HnToSnAuthMsg>(
      f.hn().handle_request(fwd.message, f.sn().id(), f.rng(), sid));
  ASSERT_TRUE(f.ue().process_challenge(*f.sn().forward_challenge(fwd.session_id, vec)));
  EXPECT_EQ(*f.ue().state().k_s, k_s);
  EXPECT_TRUE(f.ue().state().k_s_pending);
  EXPECT_TRUE(f.ue().handle_guti_assignment(wire::GutiAssignMsg{Guti{}, Block256{}}));
  EXPECT_NE(*f.ue().state().k_s, k_s);
  EXPECT_FALSE(f.ue().handle_guti_assignment(wire::GutiAssignMsg{Guti{}, Block256{}}));
}
