#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pqaka/crypto/kem.hpp"
#include "pqaka/hn.hpp"
#include "pqaka/random.hpp"
#include "pqaka/sn.hpp"
#include "pqaka/ue.hpp"
#include "pqaka/wire.hpp"

namespace pqaka::sim {

inline constexpr std::string_view kDefaultIdHn = "hn.mnc001.mcc001";
inline constexpr std::string_view kDefaultIdSn = "5G:mnc001.mcc001.3gppnetwork.org";

enum class ChannelKind { kRadio, kCore };
enum class Direction { kUeToSn, kSnToUe, kSnToHn, kHnToSn };

std::string_view to_string(ChannelKind kind) noexcept;
std::string_view to_string(Direction dir) noexcept;

struct TranscriptEntry {
  std::size_t step = 0;  // world clock
  ChannelKind channel = ChannelKind::kRadio;
  Direction direction = Direction::kUeToSn;
  Bytes bytes;                           // as sent
  std::optional<Bytes> delivered_bytes;  // set when an attacker replaced the message
  bool delivered = true;
  std::vector<std::string> annotations;

  /// Bytes that reached the receiver (empty view if dropped).
  ByteView received() const noexcept;
};

/// Append-only record of one session.
class SessionTranscript {
 public:
  const std::vector<TranscriptEntry>& entries() const noexcept { return entries_; }
  TranscriptEntry& append(TranscriptEntry entry);
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t count(ChannelKind kind) const noexcept;

  /// First entry whose sent bytes carry `type`, if any.
  const TranscriptEntry* find(wire::MessageType type) const noexcept;

  /// One JSON object per line.
  std::string to_jsonl() const;

 private:
  std::vector<TranscriptEntry> entries_;
};

enum class TapVerdict { kPass, kDrop, kReplace };

struct TapResult {
  TapVerdict verdict = TapVerdict::kPass;
  Bytes replacement;

  static TapResult pass() { return {}; }
  static TapResult drop() { return {TapVerdict::kDrop, {}}; }
  static TapResult replace(Bytes b) { return {TapVerdict::kReplace, std::move(b)}; }
};

struct TapEvent {
  std::size_t step;
  std::size_t session;  // world-wide session counter
  Direction direction;
  std::optional<wire::MessageType> type;
  ByteView bytes;
};

/// Synchronous callback at each radio message boundary.
using RadioTap = std::function<TapResult(const TapEvent&)>;

enum class CompromiseTarget { kUeLongTermKey, kHnSecretKey, kHnRegistry, kSnSessionKeys };
std::string_view to_string(CompromiseTarget target) noexcept;

struct CompromiseRecord {
  CompromiseTarget target;
  std::size_t at_step;
  std::map<std::string, Bytes> secrets;  // label -> value
};

class World;

/// Dolev-Yao attacker on the radio channel plus an explicit compromise log.
class Attacker {
 public:
  /// Taps run in insertion order; the first non-pass result wins.
  void tap(ChannelKind channel, RadioTap tap);
  void clear_taps() { taps_.clear(); }

  const std::vector<Bytes>& observed() const noexcept { return observed_; }
  const std::vector<Bytes>& injected() const noexcept { return injected_; }
  const std::vector<CompromiseRecord>& compromised() const noexcept { return compromised_; }

  /// Copies the named long-term secret. kSnSessionKeys copies the K_seaf
  /// values the SN holds for completed sessions.
  CompromiseRecord compromise(CompromiseTarget target, const World& world,
                              std::size_t index = 0);

  /// Radio delivery hook used by the simulator.
  std::optional<Bytes> intercept(const TapEvent& event);

  // Ready-made taps.
  static RadioTap drop_type(wire::MessageType type, std::optional<std::size_t> session = {});
  static RadioTap replace_type(wire::MessageType type, Bytes replacement,
                               std::optional<std::size_t> session = {});
  static RadioTap tamper_type(wire::MessageType type, std::function<Bytes(ByteView)> mutate,
                              std::optional<std::size_t> session = {});

 private:
  std::vector<RadioTap> taps_;
  std::vector<Bytes> observed_;
  std::vector<Bytes> injected_;
  std::vector<CompromiseRecord> compromised_;
};

enum class SessionMode { kSupi, kGuti };

struct SessionOptions {
  SessionMode mode = SessionMode::kSupi;
  bool lose_hn_confirmation = false;  // fault injection on the core network
  /// SN identity the UE believes it is attached to; defaults to the
  /// serving SN's own identity. A mismatch models a relaying fake SN.
  std::optional<std::string> ue_camped_on;
};

inline SessionOptions in_mode(SessionMode mode) {
  SessionOptions o;
  o.mode = mode;
  return o;
}

struct SessionOutcome {
  bool completed = false;          // SN verified RES* and recovered (SUPI, K_seaf)
  std::string aborted_at;          // step name when not completed
  IdentificationPath path = IdentificationPath::kSupi;
  Block256 session_id{};
  std::optional<SharedKey256> ue_k_seaf;
  std::optional<SharedKey256> sn_k_seaf;
  std::optional<SharedKey256> hn_k_seaf;
  std::optional<std::string> sn_supi;
  bool hn_confirmed = false;
  bool assignment_applied = false;
  UeAbort ue_abort = UeAbort::kNone;

  bool keys_agree() const noexcept;
};

struct SessionResult {
  SessionTranscript transcript;
  SessionOutcome outcome;
};

/// UEs, SNs and one HN sharing a seeded RNG and a step clock.
class World {
 public:
  /// Provisioning draws from SeededRandom(1000 + seed); sessions from
  /// SeededRandom(seed).
  World(crypto::KemHandle suite, std::uint64_t seed, HnHooks hn_hooks = {});

  std::size_t add_serving_network(std::string id_sn = std::string(kDefaultIdSn));
  /// Registers a subscriber at the HN and builds its UE. A missing `k` is
  /// drawn from the provisioning RNG.
  std::size_t add_subscriber(std::string supi, std::optional<SharedKey256> k = {},
                             UeHooks hooks = {});

  HomeNetwork& hn() noexcept { return *hn_; }
  const HomeNetwork& hn() const noexcept { return *hn_; }
  ServingNetwork& sn(std::size_t i) { return sns_.at(i); }
  const ServingNetwork& sn(std::size_t i) const { return sns_.at(i); }
  UserEquipment& ue(std::size_t i) { return ues_.at(i); }
  const UserEquipment& ue(std::size_t i) const { return ues_.at(i); }
  std::size_t ue_count() const noexcept { return ues_.size(); }
  std::size_t sn_count() const noexcept { return sns_.size(); }
  const crypto::KemSuite& suite() const noexcept { return *suite_; }

  RandomSource& rng() noexcept { return rng_; }
  std::size_t clock() const noexcept { return clock_; }
  std::size_t tick() noexcept { return clock_++; }
  std::size_t next_session() noexcept { return sessions_++; }

 private:
  crypto::KemHandle suite_;
  SeededRandom provisioning_rng_;
  SeededRandom rng_;
  std::unique_ptr<HomeNetwork> hn_;
  std::vector<ServingNetwork> sns_;
  std::vector<UserEquipment> ues_;
  std::size_t clock_ = 0;
  std::size_t sessions_ = 0;
};

/// Drives one full identification + authentication + GUTI assignment.
SessionResult run_session(World& world, std::size_t ue_index, std::size_t sn_index,
                          SessionOptions options = {}, Attacker* attacker = nullptr);

}  // namespace pqaka::sim
