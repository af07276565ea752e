#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pqaka/crypto/kem.hpp"
#include "pqaka/protocol.hpp"
#include "pqaka/random.hpp"
#include "pqaka/wire.hpp"

namespace pqaka {

struct SubscriberRecord {
  std::string supi;
  SharedKey256 k;
  std::optional<SharedKey256> k_s;
  std::optional<SharedKey256> k_s_staged;  // set between vector issuance and confirmation
  friend bool operator==(const SubscriberRecord&, const SubscriberRecord&) = default;
};

struct PendingAuthentication {
  std::string supi;
  Block256 xres_star;
  SharedKey256 k_seaf;
};

struct HnState {
  std::string id_hn;
  crypto::KemKeyPair kem_pair;  // (pk_H, sk_H); sk_H is never put on the wire
  std::map<std::string, SubscriberRecord, std::less<>> registry;
  std::set<std::string, std::less<>> sn_allowlist;
  std::map<Block256, PendingAuthentication> pending;
};

/// Output of a successful identification.
struct Identification {
  std::string supi;
  Bytes pk_u;
  std::string id_sn;
};

/// Authentication vector plus the values the HN keeps to itself.
struct AuthVectorBundle {
  wire::Autn autn;
  Block256 hxres_star;
  Bytes m;
  std::optional<Bytes> c2;

  struct Retained {
    Block256 xres_star;
    SharedKey256 k_seaf;
    SharedKey256 k3;
  } retained;

  Block256 session_id;

  wire::HnToSnAuthMsg message() const { return {autn, hxres_star, m, c2}; }
};

/// Deliberate weakenings used by negative controls.
struct HnHooks {
  bool skip_id_sn_check = false;
};

/// Home network: subscriber registry, identification, vector generation
/// and ratchet commit. One instance is driven by one thread at a time.
class HomeNetwork {
 public:
  HomeNetwork(HnState state, crypto::KemHandle suite, HnHooks hooks = {});

  /// Generates the HN KEM key pair.
  static HnState provision(std::string id_hn, const crypto::KemSuite& suite, RandomSource& rng);

  const HnState& state() const noexcept { return state_; }
  const Bytes& public_key() const noexcept { return state_.kem_pair.pk; }
  const crypto::KemSuite& suite() const noexcept { return *suite_; }
  HnHooks& hooks() noexcept { return hooks_; }

  void add_subscriber(std::string supi, const SharedKey256& k);
  void allow_serving_network(std::string id_sn);
  const SubscriberRecord* find_subscriber(std::string_view supi) const;

  /// Decaps c1, opens SUCI_conc, checks MAC_U, ID_SN binding and
  /// registration. Every failure returns std::nullopt (one generic cause).
  std::optional<Identification> identify(const wire::SnToHnIdentMsg& msg,
                                         std::string_view claimed_id_sn) const;

  /// Vector for the SUPI path (encapsulates a fresh K_s2 to pk_U).
  /// `session_id` keys the pending entry that finalize later consumes.
  AuthVectorBundle auth_vector(std::string_view supi, ByteView pk_u, const Block256& r_sn,
                               std::string_view id_sn, const Block256& session_id,
                               RandomSource& rng);

  /// Vector for the GUTI path, keyed by K_S' = K_S xor R_SN'. No c2.
  std::optional<AuthVectorBundle> guti_auth_vector(const wire::GutiSnToHnMsg& msg,
                                                   std::string_view id_sn);

  /// Commits the staged ratchet key for the session. Unknown or repeated
  /// confirmations are ignored and return false.
  bool finalize(const wire::ConfirmMsg& confirm, const Block256& session_id);

  /// Core-channel entry point: maps an SN request to the reply message
  /// (HnToSnAuthMsg or HnAbortMsg). `session_id` receives the id on success.
  wire::Message handle_request(const wire::Message& request, std::string_view claimed_id_sn,
                               RandomSource& rng, Block256& session_id);

  /// Registry persistence. When a path is set, finalize rewrites it.
  void set_registry_path(std::filesystem::path path) { registry_path_ = std::move(path); }
  void load_registry(const std::filesystem::path& path);
  void save_registry(const std::filesystem::path& path) const;

  /// Secret material for the compromise API.
  const Bytes& secret_key() const noexcept { return state_.kem_pair.sk; }

 private:
  AuthVectorBundle derive_vector(SubscriberRecord& record, const SharedKey256& k_star,
                                 const Block256& r_sn, std::string_view id_sn,
                                 std::optional<Bytes> c2, const Block256& session_id);

  HnState state_;
  crypto::KemHandle suite_;
  HnHooks hooks_;
  std::optional<std::filesystem::path> registry_path_;
};

}  // namespace pqaka
