// ECIES-style KEMs over X25519 and P-256, the two SUCI profiles used as
// the classical baseline. Only the key-encapsulation half is modeled.
#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/evp.h>
#include <openssl/obj_mac.h>

#include <memory>

#include "backends.hpp"
#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/errors.hpp"

namespace pqaka::crypto::detail {

namespace {

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using PkeyPtr = std::unique_ptr<EVP_PKEY, Deleter<EVP_PKEY, EVP_PKEY_free>>;
using PkeyCtxPtr = std::unique_ptr<EVP_PKEY_CTX, Deleter<EVP_PKEY_CTX, EVP_PKEY_CTX_free>>;
using BnPtr = std::unique_ptr<BIGNUM, Deleter<BIGNUM, BN_free>>;
using BnCtxPtr = std::unique_ptr<BN_CTX, Deleter<BN_CTX, BN_CTX_free>>;
using GroupPtr = std::unique_ptr<EC_GROUP, Deleter<EC_GROUP, EC_GROUP_free>>;
using PointPtr = std::unique_ptr<EC_POINT, Deleter<EC_POINT, EC_POINT_free>>;

/// k = kdf(z, ct, pk): binds the shared point to both public values.
Bytes shared_key(ByteView z, ByteView ct, ByteView pk) { return kdf({z, ct, pk}).bytes(); }

// --- X25519 ----------------------------------------------------------------

PkeyPtr x25519_private(ByteView sk) {
  PkeyPtr key(EVP_PKEY_new_raw_private_key(EVP_PKEY_X25519, nullptr, sk.data(), sk.size()));
  if (!key) throw Error("X25519: invalid private key");
  return key;
}

Bytes x25519_public(const EVP_PKEY* key) {
  Bytes pk(32);
  std::size_t len = pk.size();
  if (EVP_PKEY_get_raw_public_key(key, pk.data(), &len) != 1 || len != 32) {
    throw Error("X25519: public key export failed");
  }
  return pk;
}

std::optional<Bytes> x25519_derive(ByteView sk, ByteView peer) {
  PkeyPtr own = x25519_private(sk);
  PkeyPtr other(EVP_PKEY_new_raw_public_key(EVP_PKEY_X25519, nullptr, peer.data(), peer.size()));
  if (!other) return std::nullopt;
  PkeyCtxPtr ctx(EVP_PKEY_CTX_new(own.get(), nullptr));
  Bytes z(32);
  std::size_t len = z.size();
  if (!ctx || EVP_PKEY_derive_init(ctx.get()) != 1 ||
      EVP_PKEY_derive_set_peer(ctx.get(), other.get()) != 1 ||
      EVP_PKEY_derive(ctx.get(), z.data(), &len) != 1 || len != 32) {
    return std::nullopt;
  }
  return z;
}

class EciesX25519 final : public KemSuite {
 public:
  std::string_view name() const noexcept override { return "ecies-x25519"; }
  std::string_view algorithm() const noexcept override { return "ECIES Curve25519"; }
  KemSizes sizes() const noexcept override { return {32, 32, 32, 32}; }

 protected:
  KemKeyPair do_keygen(RandomSource& rng) const override {
    Bytes sk = rng.bytes(32);
    return {x25519_public(x25519_private(sk).get()), std::move(sk)};
  }

  RawEncapsulation do_encaps(ByteView pk, RandomSource& rng) const override {
    Bytes eph = rng.bytes(32);
    Bytes ct = x25519_public(x25519_private(eph).get());
    auto z = x25519_derive(eph, pk);
    secure_wipe(eph);
    if (!z) throw EncodingError("X25519: invalid public key");
    Bytes k = shared_key(*z, ct, pk);
    secure_wipe(*z);
    return {std::move(ct), std::move(k)};
  }

  std::optional<Bytes> do_decaps(ByteView sk, ByteView ct) const override {
    auto z = x25519_derive(sk, ct);
    if (!z) return std::nullopt;
    const Bytes pk = x25519_public(x25519_private(sk).get());
    Bytes k = shared_key(*z, ct, pk);
    secure_wipe(*z);
    return k;
  }
};

// --- P-256 with x-only point encoding ---------------------------------------
//
// Public keys and ciphertexts carry only the 32-byte x-coordinate. The
// receiver lifts x to either of the two points; both give the same
// x-coordinate after scalar multiplication, so ECDH is unaffected.

class P256 {
 public:
  P256() : group_(EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1)), bn_ctx_(BN_CTX_new()) {
    if (!group_ || !bn_ctx_) throw Error("P-256: group setup failed");
  }

  Bytes random_scalar(RandomSource& rng) const {
    const BIGNUM* order = EC_GROUP_get0_order(group_.get());
    for (;;) {
      Bytes candidate = rng.bytes(32);
      BnPtr value(BN_bin2bn(candidate.data(), static_cast<int>(candidate.size()), nullptr));
      if (!BN_is_zero(value.get()) && BN_cmp(value.get(), order) < 0) return candidate;
    }
  }

  /// x-coordinate of scalar * point (point = generator when `peer_x` is empty).
  std::optional<Bytes> multiply_x(ByteView scalar, ByteView peer_x) const {
    BnPtr k(BN_bin2bn(scalar.data(), static_cast<int>(scalar.size()), nullptr));
    PointPtr result(EC_POINT_new(group_.get()));
    if (!k || !result) throw Error("P-256: allocation failed");
    int ok = 0;
    if (peer_x.empty()) {
      ok = EC_POINT_mul(group_.get(), result.get(), k.get(), nullptr, nullptr, bn_ctx_.get());
    } else {
      PointPtr peer(EC_POINT_new(group_.get()));
      Bytes compressed{0x02};
      compressed.insert(compressed.end(), peer_x.begin(), peer_x.end());
      if (EC_POINT_oct2point(group_.get(), peer.get(), compressed.data(), compressed.size(),
                             bn_ctx_.get()) != 1) {
        return std::nullopt;
      }
      ok = EC_POINT_mul(group_.get(), result.get(), nullptr, peer.get(), k.get(), bn_ctx_.get());
    }
    if (ok != 1 || EC_POINT_is_at_infinity(group_.get(), result.get())) return std::nullopt;
    BnPtr x(BN_new());
    if (EC_POINT_get_affine_coordinates(group_.get(), result.get(), x.get(), nullptr,
                                        bn_ctx_.get()) != 1) {
      return std::nullopt;
    }
    Bytes out(32);
    if (BN_bn2binpad(x.get(), out.data(), static_cast<int>(out.size())) != 32) return std::nullopt;
    return out;
  }

 private:
  GroupPtr group_;
  BnCtxPtr bn_ctx_;
};

class EciesP256 final : public KemSuite {
 public:
  std::string_view name() const noexcept override { return "ecies-p256"; }
  std::string_view algorithm() const noexcept override { return "ECIES Secp256r1"; }
  KemSizes sizes() const noexcept override { return {32, 32, 32, 32}; }

 protected:
  KemKeyPair do_keygen(RandomSource& rng) const override {
    P256 curve;
    Bytes sk = curve.random_scalar(rng);
    auto pk = curve.multiply_x(sk, {});
    if (!pk) throw Error("P-256: key generation failed");
    return {std::move(*pk), std::move(sk)};
  }

  RawEncapsulation do_encaps(ByteView pk, RandomSource& rng) const override {
    P256 curve;
    Bytes eph = curve.random_scalar(rng);
    auto ct = curve.multiply_x(eph, {});
    auto z = curve.multiply_x(eph, pk);
    secure_wipe(eph);
    if (!ct || !z) throw EncodingError("P-256: invalid public key");
    Bytes k = shared_key(*z, *ct, pk);
    secure_wipe(*z);
    return {std::move(*ct), std::move(k)};
  }

  std::optional<Bytes> do_decaps(ByteView sk, ByteView ct) const override {
    P256 curve;
    auto z = curve.multiply_x(sk, ct);
    auto pk = curve.multiply_x(sk, {});
    if (!z || !pk) return std::nullopt;
    Bytes k = shared_key(*z, ct, *pk);
    secure_wipe(*z);
    return k;
  }
};

}  // namespace

KemHandle make_ecies_x25519() { return std::make_shared<EciesX25519>(); }
KemHandle make_ecies_p256() { return std::make_shared<EciesP256>(); }

}  // namespace pqaka::crypto::detail
