#include <gtest/gtest.h>

#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/random.hpp"
#include "sha256_oracle.hpp"

using namespace pqaka;
using namespace pqaka::crypto;

namespace {

Bytes vec(const std::array<std::uint8_t, 32>& a) { return Bytes(a.begin(), a.end()); }

}  // namespace

TEST(Sha256, KnownAnswers) {
  EXPECT_EQ(to_hex(sha256(as_bytes("abc"))),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(to_hex(sha256(ByteView{})),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Sha256, AgreesWithIndependentOracle) {
  SeededRandom rng(1);
  for (std::size_t n : {0u, 1u, 55u, 56u, 63u, 64u, 65u, 119u, 1000u}) {
    const Bytes m = rng.bytes(n);
    EXPECT_EQ(sha256(m).bytes(), vec(oracle::sha256(m))) << n;
  }
}

TEST(Hmac, Rfc4231Case2) {
  const auto k = to_bytes("Jefe");
  const auto m = to_bytes("what do ya want for nothing?");
  EXPECT_EQ(to_hex(oracle::hmac_sha256(k, m)),
            "5bdcc146bf60754e6a042426089575c75a003f089d2739839dec58b964ec3843");
}

TEST(Hmac, AgreesWithIndependentOracle) {
  SeededRandom rng(2);
  const auto key = rng.draw<32>();
  const Bytes m = rng.bytes(77);
  EXPECT_EQ(hmac_tag(key, m).bytes(), vec(oracle::hmac_sha256(key.bytes(), m)));
  EXPECT_TRUE(hmac_verify(key, m, hmac_tag(key, m)));
  auto bad = hmac_tag(key, m);
  bad[0] ^= 1;
  EXPECT_FALSE(hmac_verify(key, m, bad));
}

TEST(Prf, IsDomainSeparatedHmacOverLengthPrefixedInputs) {
  SeededRandom rng(4);
  const auto k = rng.draw<32>();
  const auto x = rng.draw<32>();
  const auto y = rng.draw<32>();
  Bytes msg{0x01, 0, 0, 0, 32};
  msg.insert(msg.end(), x.begin(), x.end());
  msg.insert(msg.end(), {0, 0, 0, 32});
  msg.insert(msg.end(), y.begin(), y.end());
  EXPECT_EQ(prf_f(PrfIndex::kF1, k, {x, y}).bytes(), vec(oracle::hmac_sha256(k.bytes(), msg)));
  EXPECT_NE(prf_f(PrfIndex::kF2, k, {x}), prf_f(PrfIndex::kF3, k, {x}));
  EXPECT_THROW(prf_f(PrfIndex::kF1, k, InputList{}), UsageError);
}

TEST(Kdf, LengthPrefixingSeparatesSplits) {
  EXPECT_NE(kdf({as_bytes("ab"), as_bytes("c")}), kdf({as_bytes("a"), as_bytes("bc")}));
  EXPECT_EQ(kdf({as_bytes("ab")}).bytes(),
            vec(oracle::sha256(Bytes{0, 0, 0, 2, 'a', 'b'})));
  EXPECT_THROW(kdf(InputList{}), UsageError);
}

TEST(Aead, NistGcmZeroKeyVector) {
  // AES-256-GCM, key 0^32, IV 0^12, PT 0^16
  const SharedKey256 key{};
  const Bytes sealed = aead_seal(key, Bytes(16, 0));
  EXPECT_EQ(to_hex(sealed),
            "cea7403d4d606b6e074ec5d3baf39d18d0d1c8a799996bf0265b98b5d48ab919");
}

TEST(Aead, RejectsTamperingAndWrongKey) {
  SeededRandom rng(5);
  const auto key = rng.draw<32>();
  const Bytes pt = rng.bytes(40);
  Bytes sealed = aead_seal(key, pt);
  ASSERT_EQ(sealed.size(), pt.size() + kAeadTagSize);
  EXPECT_EQ(aead_open(key, sealed), pt);
  EXPECT_FALSE(aead_open(rng.draw<32>(), sealed));
  for (std::size_t i = 0; i < sealed.size(); i += 7) {
    Bytes t = sealed;
    t[i] ^= 0x80;
    EXPECT_FALSE(aead_open(key, t)) << i;
  }
  EXPECT_FALSE(aead_open(key, Bytes(kAeadTagSize)));
  EXPECT_THROW(aead_seal(key, {}), UsageError);
}

TEST(ConstantTimeEqual, ComparesLengthAndContent) {
  EXPECT_TRUE(constant_time_equal(as_bytes("abc"), as_bytes("abc")));
  EXPECT_FALSE(constant_time_equal(as_bytes("abc"), as_bytes("abd")));
  EXPECT_FALSE(constant_time_equal(as_bytes("abc"), as_bytes("ab")));
}
