#include "pqaka/crypto/kem.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "backends.hpp"
#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/errors.hpp"

namespace pqaka::crypto {

namespace {

void check_length(const char* what, std::size_t got, std::size_t want) {
  if (got != want) {
    throw EncodingError(std::string(what) + " must be " + std::to_string(want) + " bytes, got " +
                        std::to_string(got));
  }
}

class TestKem final : public KemSuite {
 public:
  std::string_view name() const noexcept override { return "test"; }
  std::string_view algorithm() const noexcept override { return "TestKEM (insecure)"; }
  KemSizes sizes() const noexcept override { return {32, 32, 32, 32}; }

 protected:
  KemKeyPair do_keygen(RandomSource& rng) const override {
    const auto sk = rng.draw<32>();
    return {public_from_secret(sk).bytes(), sk.bytes()};
  }

  RawEncapsulation do_encaps(ByteView pk, RandomSource& rng) const override {
    const auto r = rng.draw<32>();
    return {r.bytes(), hash_h({pk, r}).bytes()};
  }

  std::optional<Bytes> do_decaps(ByteView sk, ByteView ct) const override {
    const auto pk = public_from_secret(SharedKey256::from(sk));
    return hash_h({pk, ct}).bytes();
  }

 private:
  static Block256 public_from_secret(const SharedKey256& sk) {
    return hmac_tag(sk, as_bytes("pk"));
  }
};

struct RegistryEntry {
  std::string name;
  KemHandle (*factory)();
};

KemHandle make_kyber() { return detail::make_oqs_kem("kyber"); }
KemHandle make_mceliece() { return detail::make_oqs_kem("mceliece"); }
KemHandle make_bike() { return detail::make_oqs_kem("bike"); }
KemHandle make_hqc() { return detail::make_oqs_kem("hqc"); }

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = {
      {"test", &make_test_kem},
      {"ecies-x25519", &detail::make_ecies_x25519},
      {"ecies-p256", &detail::make_ecies_p256},
      {"kyber", &make_kyber},
      {"mceliece", &make_mceliece},
      {"bike", &make_bike},
      {"hqc", &make_hqc},
  };
  return entries;
}

KemHandle lookup(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, KemHandle, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  const auto& entries = registry();
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const RegistryEntry& e) { return e.name == name; });
  if (it == entries.end()) return nullptr;
  KemHandle handle = it->factory();
  cache.emplace(std::string(name), handle);
  return handle;
}

}  // namespace

KemKeyPair KemSuite::keygen(RandomSource& rng) const {
  KemKeyPair pair = do_keygen(rng);
  const auto s = sizes();
  check_length("public key", pair.pk.size(), s.pk);
  check_length("secret key", pair.sk.size(), s.sk);
  return pair;
}

Encapsulation KemSuite::encaps(ByteView pk, RandomSource& rng) const {
  const auto s = sizes();
  check_length("public key", pk.size(), s.pk);
  RawEncapsulation raw = do_encaps(pk, rng);
  check_length("ciphertext", raw.ct.size(), s.ct);
  check_length("shared secret", raw.secret.size(), s.key);
  Encapsulation out{std::move(raw.ct), normalize(raw.secret)};
  secure_wipe(raw.secret);
  return out;
}

std::optional<SharedKey256> KemSuite::decaps(ByteView sk, ByteView ct) const {
  const auto s = sizes();
  check_length("secret key", sk.size(), s.sk);
  check_length("ciphertext", ct.size(), s.ct);
  auto secret = do_decaps(sk, ct);
  if (!secret) return std::nullopt;
  check_length("shared secret", secret->size(), s.key);
  const SharedKey256 key = normalize(*secret);
  secure_wipe(*secret);
  return key;
}

SharedKey256 KemSuite::normalize(ByteView secret) const {
  if (secret.size() == SharedKey256::kSize) return SharedKey256::from(secret);
  return hash_h({secret});
}

KemHandle make_test_kem() { return std::make_shared<TestKem>(); }

std::vector<std::string> known_kem_names() {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.push_back(e.name);
  return names;
}

std::vector<std::string> available_kem_names() {
  std::vector<std::string> names;
  for (const auto& e : registry()) {
    if (lookup(e.name)) names.push_back(e.name);
  }
  return names;
}

bool kem_available(std::string_view name) { return lookup(name) != nullptr; }

KemHandle find_kem(std::string_view name) {
  if (auto handle = lookup(name)) return handle;
  std::string list;
  for (const auto& n : available_kem_names()) {
    if (!list.empty()) list += ", ";
    list += n;
  }
  const auto known = known_kem_names();
  const bool is_known = std::find(known.begin(), known.end(), name) != known.end();
  throw SuiteUnavailable("KEM suite '" + std::string(name) + "' " +
                         (is_known ? "is not compiled into this build" : "is not registered") +
                         "; available: " + list);
}

}  // namespace pqaka::crypto
