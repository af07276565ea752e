#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

// Plain FIPS 180-4 SHA-256 and RFC 2104 HMAC, no OpenSSL.
std::array<std::uint8_t, 32> sha256(const std::vector<std::uint8_t>& msg);
std::array<std::uint8_t, 32> hmac_sha256(const std::vector<std::uint8_t>& key,
                                         const std::vector<std::uint8_t>& msg);

}  // namespace oracle
