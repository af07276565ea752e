#pragma once

#include <optional>
#include <string>

#include "pqaka/crypto/kem.hpp"
#include "pqaka/protocol.hpp"
#include "pqaka/random.hpp"
#include "pqaka/wire.hpp"

namespace pqaka {

/// USIM + ME state, modeled as one secure entity.
struct UeState {
  std::string supi;
  SharedKey256 k;  // long-term key; never leaves this object except via compromise
  Bytes pk_h;
  std::string id_hn;
  std::string id_sn_expected;

  std::optional<Guti> guti;
  std::optional<SharedKey256> k_s;          // confirmed ratchet key
  std::optional<SharedKey256> k_s_pending;  // staged until the GUTI assignment arrives
  std::optional<Block256> r_sn_prime;

  std::optional<crypto::KemKeyPair> ephemeral;  // (pk_U, sk_U) of the running SUPI session
  std::optional<IdentificationPath> awaiting;   // identifier sent in the running session
  std::optional<SessionKeys> session_keys;
};

/// Why the UE last dropped a challenge. Diagnostic only: nothing is sent.
enum class UeAbort {
  kNone,
  kNoSession,
  kPathMismatch,
  kDecapsFailure,
  kMacMismatch,
};

/// Deliberate weakenings used by negative controls.
struct UeHooks {
  bool skip_mac_check = false;
  bool reuse_ephemeral = false;
};

class UserEquipment {
 public:
  UserEquipment(UeState initial, crypto::KemHandle suite, UeHooks hooks = {});

  const UeState& state() const noexcept { return state_; }
  const crypto::KemSuite& suite() const noexcept { return *suite_; }
  UeAbort last_abort() const noexcept { return last_abort_; }

  /// Sets the serving network identity the UE is camped on.
  void attach(std::string id_sn) { state_.id_sn_expected = std::move(id_sn); }

  /// Compromise API: the long-term key.
  const SharedKey256& long_term_key() const noexcept { return state_.k; }

  /// SUCI-based identification response. Throws UsageError when pk_H is not
  /// provisioned.
  wire::IdResponseMsg identification_response(RandomSource& rng);

  /// GUTI-based identification; std::nullopt tells the caller to use the
  /// SUPI path instead.
  std::optional<wire::GutiIdMsg> guti_identification();

  /// Verifies the challenge and returns RES*, or std::nullopt for a silent
  /// abort.
  std::optional<wire::ResponseMsg> process_challenge(const wire::ChallengeMsg& challenge);

  /// Applies a GUTI assignment; this is also the completion confirmation
  /// that commits the pending ratchet key. Returns false if ignored.
  bool handle_guti_assignment(const wire::GutiAssignMsg& assignment);

  /// Opens a SecuredMsg on the channel keyed by the current K_seaf and
  /// applies the assignment it carries.
  bool handle_secured(const wire::SecuredMsg& secured);

  /// Abandons the running session (timeout) and wipes the ephemeral key.
  void abandon_session();

 private:
  struct UsimOutput {
    Block256 r_sn;
    Block256 res;
    SharedKey256 ck;
    SharedKey256 ik;
  };

  std::optional<UsimOutput> usim_respond(const SharedKey256& k_star, const wire::Autn& autn);
  Block256 me_respond(const SharedKey256& k_star, const UsimOutput& usim, const wire::Autn& autn);
  void clear_ephemeral();
  std::optional<wire::ResponseMsg> abort(UeAbort reason);

  UeState state_;
  crypto::KemHandle suite_;
  UeHooks hooks_;
  UeAbort last_abort_ = UeAbort::kNone;
  std::optional<wire::IdResponseMsg> reused_response_;
};

}  // namespace pqaka
