#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pqaka/errors.hpp"

namespace pqaka {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Fixed-width byte string. Used for every 256-bit protocol value (keys,
/// R_SN, tags) and for the 128-bit GUTI.
template <std::size_t N>
struct FixedBytes {
  static constexpr std::size_t kSize = N;

  std::array<std::uint8_t, N> data{};

  static FixedBytes from(ByteView view);

  constexpr std::size_t size() const noexcept { return N; }
  const std::uint8_t* begin() const noexcept { return data.data(); }
  const std::uint8_t* end() const noexcept { return data.data() + N; }
  std::uint8_t& operator[](std::size_t i) noexcept { return data[i]; }
  std::uint8_t operator[](std::size_t i) const noexcept { return data[i]; }

  ByteView view() const noexcept { return ByteView(data); }
  operator ByteView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)
  Bytes bytes() const { return Bytes(data.begin(), data.end()); }

  bool is_zero() const noexcept {
    return std::all_of(data.begin(), data.end(), [](std::uint8_t b) { return b == 0; });
  }

  friend FixedBytes operator^(const FixedBytes& a, const FixedBytes& b) noexcept {
    FixedBytes out;
    for (std::size_t i = 0; i < N; ++i) out.data[i] = a.data[i] ^ b.data[i];
    return out;
  }

  friend bool operator==(const FixedBytes&, const FixedBytes&) = default;
  friend auto operator<=>(const FixedBytes&, const FixedBytes&) = default;
};

template <std::size_t N>
FixedBytes<N> FixedBytes<N>::from(ByteView view) {
  if (view.size() != N) {
    throw EncodingError("expected " + std::to_string(N) + " bytes, got " +
                        std::to_string(view.size()));
  }
  FixedBytes out;
  std::copy(view.begin(), view.end(), out.data.begin());
  return out;
}

using Block256 = FixedBytes<32>;
/// Every symmetric key in the protocol (K, K_s1, K_s2, K_S, CK, IK, K_seaf, ...).
using SharedKey256 = Block256;
using Tag256 = Block256;
using Guti = FixedBytes<16>;

std::string to_hex(ByteView bytes);
Bytes from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view s) noexcept {
  return ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline std::string to_string(ByteView b) { return std::string(b.begin(), b.end()); }

inline Bytes concat(std::initializer_list<ByteView> parts) {
  Bytes out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// True if `needle` occurs as a contiguous substring of `haystack`.
bool contains(ByteView haystack, ByteView needle);

/// Overwrites the buffer with zeros in a way the optimizer cannot drop.
void secure_wipe(std::span<std::uint8_t> buffer) noexcept;

}  // namespace pqaka
