#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pqaka/bytes.hpp"
#include "pqaka/errors.hpp"

namespace pqaka::wire {

// Layout of every message: one type tag byte, then each field in
// declaration order as a 4-byte big-endian length followed by the raw
// bytes. Optional fields are preceded by a single presence byte (0 or 1)
// that is not length-prefixed. Strings are UTF-8.

enum class MessageType : std::uint8_t {
  kIdRequest = 0x01,
  kIdResponse = 0x02,
  kSnToHnIdent = 0x03,
  kHnToSnAuth = 0x04,
  kChallenge = 0x05,
  kResponse = 0x06,
  kConfirm = 0x07,
  kGutiId = 0x08,
  kGutiSnToHn = 0x09,
  kGutiAssign = 0x0a,
  kSecured = 0x0b,
  kHnAbort = 0x0c,
};

/// SN -> UE. Empty payload.
struct IdRequestMsg {
  friend bool operator==(const IdRequestMsg&, const IdRequestMsg&) = default;
};

/// UE -> SN: (c1, SUCI_conc, MAC_U, ID_HN).
struct IdResponseMsg {
  Bytes c1;
  Bytes suci_conc;
  Tag256 mac_u;
  std::string id_hn;
  friend bool operator==(const IdResponseMsg&, const IdResponseMsg&) = default;
};

/// SN -> HN: the UE's concealed identity plus the SN's fresh R_SN.
struct SnToHnIdentMsg {
  Bytes c1;
  Bytes suci_conc;
  Tag256 mac_u;
  Block256 r_sn;
  friend bool operator==(const SnToHnIdentMsg&, const SnToHnIdentMsg&) = default;
};

/// AUTN = CONC || MAC, 64 bytes on the wire.
struct Autn {
  Block256 conc;
  Tag256 mac;
  friend bool operator==(const Autn&, const Autn&) = default;
};

/// HN -> SN. `c2` is absent on the GUTI path.
struct HnToSnAuthMsg {
  Autn autn;
  Block256 hxres_star;
  Bytes m;
  std::optional<Bytes> c2;
  friend bool operator==(const HnToSnAuthMsg&, const HnToSnAuthMsg&) = default;
};

/// SN -> UE: only AUTN and c2 leave the SN.
struct ChallengeMsg {
  Autn autn;
  std::optional<Bytes> c2;
  friend bool operator==(const ChallengeMsg&, const ChallengeMsg&) = default;
};

struct ResponseMsg {
  Block256 res_star;
  friend bool operator==(const ResponseMsg&, const ResponseMsg&) = default;
};

/// SN -> HN after the SN recovered (K_seaf, SUPI).
struct ConfirmMsg {
  bool ok = true;
  friend bool operator==(const ConfirmMsg&, const ConfirmMsg&) = default;
};

struct GutiIdMsg {
  Guti guti;
  friend bool operator==(const GutiIdMsg&, const GutiIdMsg&) = default;
};

struct GutiSnToHnMsg {
  std::string supi;
  Block256 r_sn_prime;
  Block256 r_sn;
  friend bool operator==(const GutiSnToHnMsg&, const GutiSnToHnMsg&) = default;
};

struct GutiAssignMsg {
  Guti guti_new;
  Block256 r_sn_prime_new;
  friend bool operator==(const GutiAssignMsg&, const GutiAssignMsg&) = default;
};

/// Radio envelope for traffic on the channel established by a completed
/// authentication (AEAD under a key derived from K_seaf). Carries the
/// encoded GutiAssignMsg.
struct SecuredMsg {
  Bytes sealed;
  friend bool operator==(const SecuredMsg&, const SecuredMsg&) = default;
};

/// HN -> SN generic identification/authentication failure. Every failure
/// cause maps to this one message.
struct HnAbortMsg {
  friend bool operator==(const HnAbortMsg&, const HnAbortMsg&) = default;
};

using Message = std::variant<IdRequestMsg, IdResponseMsg, SnToHnIdentMsg, HnToSnAuthMsg,
                             ChallengeMsg, ResponseMsg, ConfirmMsg, GutiIdMsg, GutiSnToHnMsg,
                             GutiAssignMsg, SecuredMsg, HnAbortMsg>;

MessageType type_of(const Message& msg) noexcept;
std::string_view type_name(MessageType type) noexcept;
/// Type tag of an encoded message, if the first byte is a known tag.
std::optional<MessageType> peek_type(ByteView encoded) noexcept;

/// Throws EncodingError if a field violates its width or non-emptiness
/// invariant.
Bytes encode(const Message& msg);

/// Strict inverse of encode: rejects unknown tags, truncation, bad widths,
/// bad flags, invalid UTF-8 and trailing bytes with a ParseError.
Message decode(ByteView bytes);

/// Decode and require a specific alternative.
template <typename T>
T decode_as(ByteView bytes) {
  Message msg = decode(bytes);
  if (auto* typed = std::get_if<T>(&msg)) return std::move(*typed);
  throw ParseError(std::string("unexpected message type ") +
                       std::string(type_name(type_of(msg))),
                   0);
}

}  // namespace pqaka::wire
