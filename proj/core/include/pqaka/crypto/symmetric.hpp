#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>

#include "pqaka/bytes.hpp"

namespace pqaka::crypto {

/// The seven keyed functions f1..f5, f1*, f5*. The enum value is the
/// domain-separation byte prepended to the PRF input.
enum class PrfIndex : std::uint8_t {
  kF1 = 0x01,
  kF2 = 0x02,
  kF3 = 0x03,
  kF4 = 0x04,
  kF5 = 0x05,
  kF1Star = 0x06,
  kF5Star = 0x07,
};

inline constexpr std::size_t kAeadTagSize = 16;

using InputList = std::span<const ByteView>;

/// 4-byte big-endian length prefix followed by the field, for each input.
Bytes length_prefixed(InputList inputs);

/// f_index(key, inputs) = HMAC-SHA-256(key, index || lp(in_1) || ... || lp(in_n)).
SharedKey256 prf_f(PrfIndex index, const SharedKey256& key, InputList inputs);
inline SharedKey256 prf_f(PrfIndex index, const SharedKey256& key,
                          std::initializer_list<ByteView> inputs) {
  return prf_f(index, key, InputList(inputs.begin(), inputs.size()));
}

/// SHA-256 over the length-prefixed concatenation of `inputs`.
SharedKey256 kdf(InputList inputs);
inline SharedKey256 kdf(std::initializer_list<ByteView> inputs) {
  return kdf(InputList(inputs.begin(), inputs.size()));
}

/// The hash h (ratchet) and the HXRES* hash. Same construction as kdf.
Block256 hash_h(InputList inputs);
inline Block256 hash_h(std::initializer_list<ByteView> inputs) {
  return hash_h(InputList(inputs.begin(), inputs.size()));
}

/// Plain SHA-256 of a byte string.
Block256 sha256(ByteView data);

Tag256 hmac_tag(const SharedKey256& key, ByteView data);
/// Constant-time comparison of the recomputed tag.
bool hmac_verify(const SharedKey256& key, ByteView data, const Tag256& tag);

/// AES-256-GCM under a single-use key with an all-zero nonce.
/// Output is ciphertext || 16-byte tag.
Bytes aead_seal(const SharedKey256& key, ByteView plaintext);
/// Returns std::nullopt on any authentication failure.
std::optional<Bytes> aead_open(const SharedKey256& key, ByteView sealed);

/// Constant-time equality for equal-length buffers.
bool constant_time_equal(ByteView a, ByteView b) noexcept;

}  // namespace pqaka::crypto
