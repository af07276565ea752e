#pragma once

#include <string_view>

#include "pqaka/crypto/kem.hpp"

namespace pqaka::crypto::detail {

/// liboqs-backed suite; nullptr when the algorithm is not compiled in.
KemHandle make_oqs_kem(std::string_view name);

KemHandle make_ecies_x25519();
KemHandle make_ecies_p256();

}  // namespace pqaka::crypto::detail
