#include "pqaka/ue.hpp"

#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/errors.hpp"

namespace pqaka {

using crypto::PrfIndex;

UserEquipment::UserEquipment(UeState initial, crypto::KemHandle suite, UeHooks hooks)
    : state_(std::move(initial)), suite_(std::move(suite)), hooks_(hooks) {
  if (!suite_) throw UsageError("UE requires a KEM suite");
}

wire::IdResponseMsg UserEquipment::identification_response(RandomSource& rng) {
  if (state_.pk_h.empty()) throw UsageError("UE has no HN public key provisioned");
  if (state_.supi.empty()) throw UsageError("UE has no SUPI provisioned");
  state_.awaiting = IdentificationPath::kSupi;
  state_.session_keys.reset();

  if (hooks_.reuse_ephemeral && reused_response_ && state_.ephemeral) {
    return *reused_response_;
  }

  if (state_.ephemeral) secure_wipe(state_.ephemeral->sk);
  state_.ephemeral = suite_->keygen(rng);
  auto [c1, k_s1] = suite_->encaps(state_.pk_h, rng);
  const Bytes plaintext = suci_plaintext(state_.supi, state_.ephemeral->pk, state_.id_sn_expected);
  Bytes suci_conc = crypto::aead_seal(k_s1, plaintext);
  const Tag256 mac_u = crypto::hmac_tag(k_s1, suci_conc);
  secure_wipe(k_s1.data);

  wire::IdResponseMsg out{std::move(c1), std::move(suci_conc), mac_u, state_.id_hn};
  if (hooks_.reuse_ephemeral) reused_response_ = out;
  return out;
}

std::optional<wire::GutiIdMsg> UserEquipment::guti_identification() {
  if (!state_.guti || !state_.k_s || !state_.r_sn_prime) return std::nullopt;
  state_.awaiting = IdentificationPath::kGuti;
  state_.session_keys.reset();
  return wire::GutiIdMsg{*state_.guti};
}

std::optional<UserEquipment::UsimOutput> UserEquipment::usim_respond(const SharedKey256& k_star,
                                                                     const wire::Autn& autn) {
  const SharedKey256& k = state_.k;
  const Block256 ak = crypto::prf_f(PrfIndex::kF5, k, {k_star});
  const Block256 r_sn = autn.conc ^ ak;
  const Tag256 expected = crypto::prf_f(PrfIndex::kF1, k, {k_star, r_sn});
  if (!hooks_.skip_mac_check && !crypto::constant_time_equal(expected, autn.mac)) {
    return std::nullopt;
  }
  return UsimOutput{r_sn, crypto::prf_f(PrfIndex::kF2, k, {k_star}),
                    crypto::prf_f(PrfIndex::kF3, k, {k_star}),
                    crypto::prf_f(PrfIndex::kF4, k, {k_star})};
}

Block256 UserEquipment::me_respond(const SharedKey256& k_star, const UsimOutput& usim,
                                   const wire::Autn& autn) {
  const auto id_sn = as_bytes(state_.id_sn_expected);
  const Block256 res_star = crypto::kdf({usim.ck, usim.ik, k_star, usim.res, id_sn});
  const SharedKey256 k_ausf = crypto::kdf({usim.ck, usim.ik, k_star, autn.conc, id_sn});
  const SharedKey256 k_seaf = crypto::kdf({k_ausf, id_sn});
  state_.session_keys = SessionKeys{usim.ck, usim.ik, k_ausf, k_seaf};
  return res_star;
}

std::optional<wire::ResponseMsg> UserEquipment::process_challenge(
    const wire::ChallengeMsg& challenge) {
  if (!state_.awaiting) return abort(UeAbort::kNoSession);

  SharedKey256 k_star;
  if (*state_.awaiting == IdentificationPath::kSupi) {
    if (!challenge.c2 || !state_.ephemeral) return abort(UeAbort::kPathMismatch);
    if (challenge.c2->size() != suite_->sizes().ct) return abort(UeAbort::kDecapsFailure);
    auto k_s2 = suite_->decaps(state_.ephemeral->sk, *challenge.c2);
    if (!k_s2) return abort(UeAbort::kDecapsFailure);
    k_star = *k_s2;
  } else {
    if (challenge.c2 || !state_.k_s || !state_.r_sn_prime) return abort(UeAbort::kPathMismatch);
    k_star = *state_.k_s ^ *state_.r_sn_prime;
  }

  const auto usim = usim_respond(k_star, challenge.autn);
  if (!usim) return abort(UeAbort::kMacMismatch);

  const Block256 res_star = me_respond(k_star, *usim, challenge.autn);
  state_.k_s_pending = crypto::hash_h({k_star, usim->r_sn});
  secure_wipe(k_star.data);
  clear_ephemeral();
  state_.awaiting.reset();
  last_abort_ = UeAbort::kNone;
  return wire::ResponseMsg{res_star};
}

bool UserEquipment::handle_guti_assignment(const wire::GutiAssignMsg& assignment) {
  if (!state_.k_s_pending) return false;
  state_.guti = assignment.guti_new;
  state_.r_sn_prime = assignment.r_sn_prime_new;
  state_.k_s = *state_.k_s_pending;
  state_.k_s_pending.reset();
  clear_ephemeral();
  return true;
}

bool UserEquipment::handle_secured(const wire::SecuredMsg& secured) {
  if (!state_.session_keys || !state_.k_s_pending) return false;
  const auto plaintext =
      crypto::aead_open(assignment_channel_key(state_.session_keys->k_seaf), secured.sealed);
  if (!plaintext) return false;
  try {
    return handle_guti_assignment(wire::decode_as<wire::GutiAssignMsg>(*plaintext));
  } catch (const ParseError&) {
    return false;
  }
}

void UserEquipment::abandon_session() {
  state_.awaiting.reset();
  clear_ephemeral();
}

void UserEquipment::clear_ephemeral() {
  if (hooks_.reuse_ephemeral) return;
  if (state_.ephemeral) secure_wipe(state_.ephemeral->sk);
  state_.ephemeral.reset();
}

std::optional<wire::ResponseMsg> UserEquipment::abort(UeAbort reason) {
  last_abort_ = reason;
  abandon_session();
  return std::nullopt;
}

}  // namespace pqaka
