#include <gtest/gtest.h>

#include <map>

#include "pqaka/crypto/kem.hpp"
#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/errors.hpp"

using namespace pqaka;
using namespace pqaka::crypto;

class EveryKem : public ::testing::TestWithParam<std::string> {
 protected:
  void SetUp() override {
    if (!kem_available(GetParam())) GTEST_SKIP() << GetParam() << " not compiled in";
  }
  KemHandle kem() const { return find_kem(GetParam()); }
};

TEST_P(EveryKem, RoundTripAgrees) {
  auto k = kem();
  SeededRandom rng(42);
  for (int i = 0; i < 3; ++i) {
    const auto kp = k->keygen(rng);
    const auto s = k->sizes();
    EXPECT_EQ(kp.pk.size(), s.pk);
    EXPECT_EQ(kp.sk.size(), s.sk);
    const auto enc = k->encaps(kp.pk, rng);
    EXPECT_EQ(enc.ct.size(), s.ct);
    const auto dec = k->decaps(kp.sk, enc.ct);
    ASSERT_TRUE(dec);
    EXPECT_EQ(*dec, enc.key);
  }
}

TEST_P(EveryKem, SeededRunsAreReproducible) {
  auto k = kem();
  SeededRandom a(9), b(9);
  const auto ka = k->keygen(a);
  const auto kb = k->keygen(b);
  EXPECT_EQ(ka.pk, kb.pk);
  EXPECT_EQ(k->encaps(ka.pk, a).ct, k->encaps(kb.pk, b).ct);
}

TEST_P(EveryKem, WrongSecretKeyDoesNotRecoverTheKey) {
  auto k = kem();
  SeededRandom rng(7);
  const auto kp = k->keygen(rng);
  const auto other = k->keygen(rng);
  const auto enc = k->encaps(kp.pk, rng);
  const auto dec = k->decaps(other.sk, enc.ct);
  if (dec) {
    EXPECT_NE(*dec, enc.key);
  }
}

TEST_P(EveryKem, LengthsAreEnforced) {
  auto k = kem();
  SeededRandom rng(8);
  const auto kp = k->keygen(rng);
  Bytes short_pk(kp.pk.begin(), kp.pk.end() - 1);
  EXPECT_THROW(k->encaps(short_pk, rng), EncodingError);
  const auto enc = k->encaps(kp.pk, rng);
  Bytes long_ct = enc.ct;
  long_ct.push_back(0);
  EXPECT_THROW(k->decaps(kp.sk, long_ct), EncodingError);
}

INSTANTIATE_TEST_SUITE_P(Suites, EveryKem, ::testing::ValuesIn(known_kem_names()),
                         [](const auto& info) {
                           std::string n = info.param;
                           std::replace(n.begin(), n.end(), '-', '_');
                           return n;
                         });

TEST(KemRegistry, DeclaredSizesMatchTheParameterSets) {
  const std::map<std::string, KemSizes> expected = {
      {"kyber", {1632, 800, 768, 32}},
      {"mceliece", {6452, 261120, 128, 32}},
      {"bike", {5223, 1541, 1573, 32}},
      {"hqc", {2289, 2249, 4481, 64}},
  };
  for (const auto& [name, sizes] : expected) {
    if (!kem_available(name)) continue;
    EXPECT_EQ(find_kem(name)->sizes(), sizes) << name;
  }
}

TEST(KemRegistry, UnknownNameListsAvailableSuites) {
  try {
    find_kem("nosuch");
    FAIL();
  } catch (const SuiteUnavailable& e) {
    EXPECT_NE(std::string(e.what()).find("test"), std::string::npos);
  }
}

TEST(TestKem, KeyIsHashOfPublicKeyAndCiphertext) {
  auto k = make_test_kem();
  SeededRandom rng(1);
  const auto kp = k->keygen(rng);
  EXPECT_EQ(Bytes(kp.pk), hmac_tag(SharedKey256::from(kp.sk), as_bytes("pk")).bytes());
  const auto enc = k->encaps(kp.pk, rng);
  EXPECT_EQ(enc.key, hash_h({kp.pk, enc.ct}));
}
