#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "pqaka/bytes.hpp"

namespace pqaka {

/// Injected source of randomness. Every protocol party and KEM operation
/// draws from one of these.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    fill(out);
    return out;
  }

  template <std::size_t N>
  FixedBytes<N> draw() {
    FixedBytes<N> out;
    fill(out.data);
    return out;
  }
};

/// Deterministic generator for tests and seeded simulations.
///
/// Byte stream: successive std::mt19937_64 outputs, each serialized
/// little-endian, consumed in order across calls (no bytes are skipped).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  void fill(std::span<std::uint8_t> out) override;

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  int remaining_ = 0;
};

/// Operating-system entropy (via the OpenSSL DRBG).
class OsRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

}  // namespace pqaka
