#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "pqaka/bytes.hpp"
#include "pqaka/crypto/kem.hpp"
#include "pqaka/sim.hpp"
#include "pqaka/wire.hpp"

namespace pqaka::attacks {

/// Type of a value in the attacker's knowledge. Rules only combine values
/// whose types match the protocol's call sites.
enum class Kind : std::uint8_t {
  kLongTermKey,    // K
  kKemSecretKey,   // sk_H, sk_U
  kKemPublicKey,   // pk_H, pk_U
  kKemCiphertext,  // c1, c2
  kKemSecret,      // K_s1, K_s2
  kRatchetKey,     // K_S
  kRatchetInput,   // K_S' = K_S xor R_SN'
  kRsn,
  kRsnPrime,
  kConc,
  kMac,
  kAk,  // f5 output
  kCk,
  kIk,
  kXres,
  kXresStar,  // XRES* / RES*
  kHxresStar,
  kKausf,
  kKseaf,
  kK3,
  kChannelKey,
  kSealed,  // SUCI_conc, M, secured payloads
  kTag,     // MAC_U
  kPlaintext,
  kSupi,
  kIdSn,
  kIdHn,
  kGuti,
};

std::string_view to_string(Kind kind) noexcept;

struct Fact {
  Kind kind;
  Bytes value;
  auto operator<=>(const Fact&) const = default;
};

class Knowledge {
 public:
  /// Returns true if the fact is new.
  bool add(Kind kind, ByteView value, std::size_t depth = 0);

  bool contains(Kind kind, ByteView value) const;
  /// True if any fact, whatever its type, carries exactly these bytes.
  bool contains_value(ByteView value) const;
  std::optional<std::size_t> depth_of(ByteView value) const;

  std::vector<Bytes> of(Kind kind) const;
  std::size_t size() const noexcept { return facts_.size(); }
  const std::map<Fact, std::size_t>& facts() const noexcept { return facts_; }

 private:
  std::map<Fact, std::size_t> facts_;  // fact -> round it was derived in
};

/// Fields visible in one decoded message.
void learn_message(Knowledge& k, const wire::Message& msg);
/// Everything an eavesdropper sees on the radio channel of a transcript.
void learn_radio(Knowledge& k, const sim::SessionTranscript& transcript);

struct ClosureStats {
  std::size_t rounds = 0;
  bool saturated = false;
  std::size_t aead_attempts = 0;
  std::size_t aead_successes = 0;
};

/// Saturates `k` under the protocol's operations for at most `max_depth`
/// rounds. KEM secrets come only from decaps(sk, ct).
ClosureStats close(Knowledge& k, const crypto::KemSuite& suite, std::size_t max_depth);

}  // namespace pqaka::attacks
