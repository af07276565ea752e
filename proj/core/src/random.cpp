#include "pqaka/random.hpp"

#include <openssl/rand.h>

#include "pqaka/errors.hpp"

namespace pqaka {

void SeededRandom::fill(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    if (remaining_ == 0) {
      word_ = engine_();
      remaining_ = 8;
    }
    byte = static_cast<std::uint8_t>(word_ & 0xff);
    word_ >>= 8;
    --remaining_;
  }
}

void OsRandom::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error("OS random source failed");
  }
}

}  // namespace pqaka
