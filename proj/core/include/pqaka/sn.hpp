#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "pqaka/protocol.hpp"
#include "pqaka/random.hpp"
#include "pqaka/wire.hpp"

namespace pqaka {

struct GutiEntry {
  std::string supi;
  Block256 r_sn_prime;
  friend bool operator==(const GutiEntry&, const GutiEntry&) = default;
};

/// Per-session SN memory. On the SUPI path nothing here identifies the
/// subscriber until the response verifies.
struct SnPending {
  IdentificationPath path = IdentificationPath::kSupi;
  Block256 r_sn;
  std::optional<Block256> hxres_star;
  std::optional<wire::Autn> autn;
  std::optional<Bytes> m;
  std::optional<std::string> resolved_supi;  // GUTI path only
};

struct SnCompleted {
  std::string supi;
  SharedKey256 k_seaf;
};

struct SnState {
  std::string id_sn;
  std::map<Guti, GutiEntry> guti_table;
  std::map<Block256, SnPending> pending;
  std::map<Block256, SnCompleted> completed;
};

struct ForwardedIdentification {
  Block256 session_id;
  wire::SnToHnIdentMsg message;
};

struct ForwardedGuti {
  Block256 session_id;
  wire::GutiSnToHnMsg message;
};

/// Result of a verified response.
struct SnVerification {
  std::string supi;
  SharedKey256 k_seaf;
  wire::ConfirmMsg confirm;
};

struct SnAssignment {
  wire::GutiAssignMsg assignment;
  wire::SecuredMsg secured;  // what actually goes over the radio
};

class ServingNetwork {
 public:
  explicit ServingNetwork(std::string id_sn);

  const SnState& state() const noexcept { return state_; }
  const std::string& id() const noexcept { return state_.id_sn; }

  /// Draws R_SN and wraps the UE's concealed identity for the HN.
  ForwardedIdentification forward_identification(const wire::IdResponseMsg& msg,
                                                 RandomSource& rng);

  /// Known GUTI: SUPI with the stored R_SN' and a fresh R_SN. Unknown GUTI:
  /// an identification request for the UE.
  std::variant<ForwardedGuti, wire::IdRequestMsg> resolve_guti(const wire::GutiIdMsg& msg,
                                                               RandomSource& rng);

  /// Retains (HXRES*, AUTN, M) and returns only (AUTN, c2) for the UE.
  std::optional<wire::ChallengeMsg> forward_challenge(const Block256& session_id,
                                                      const wire::HnToSnAuthMsg& msg);

  /// Checks HXRES*, derives K3 and opens M. Any failure clears the session.
  std::optional<SnVerification> verify_response(const Block256& session_id,
                                                const wire::ResponseMsg& msg);

  /// Once the HN acknowledged the confirmation: assigns a GUTI for the
  /// completed session and seals it on the K_seaf channel.
  std::optional<SnAssignment> issue_assignment(const Block256& session_id, RandomSource& rng);

  /// Fresh GUTI (redrawn on collision) and R_SN'; drops the SUPI's old GUTI.
  wire::GutiAssignMsg assign_guti(const std::string& supi, RandomSource& rng);

  void abort_session(const Block256& session_id);

  void set_table_path(std::filesystem::path path) { table_path_ = std::move(path); }
  void load_guti_table(const std::filesystem::path& path);
  void save_guti_table(const std::filesystem::path& path) const;

 private:
  SnState state_;
  std::optional<std::filesystem::path> table_path_;
};

}  // namespace pqaka
