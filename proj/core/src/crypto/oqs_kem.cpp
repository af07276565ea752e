#include <memory>
#include <mutex>
#include <string>

#include "backends.hpp"
#include "pqaka/errors.hpp"

#ifdef PQAKA_HAVE_LIBOQS
#include <oqs/oqs.h>
#endif

namespace pqaka::crypto::detail {

#ifdef PQAKA_HAVE_LIBOQS

namespace {

// liboqs draws randomness through one process-wide hook; it is routed to the
// calling thread's RandomSource for the duration of each operation.
thread_local RandomSource* tls_source = nullptr;

void route_randombytes(std::uint8_t* out, std::size_t n) {
  if (tls_source != nullptr) {
    tls_source->fill(std::span<std::uint8_t>(out, n));
    return;
  }
  OsRandom os;
  os.fill(std::span<std::uint8_t>(out, n));
}

void install_rng_hook() {
  static std::once_flag once;
  std::call_once(once, [] {
    OQS_init();
    OQS_randombytes_custom_algorithm(&route_randombytes);
  });
}

class SourceScope {
 public:
  explicit SourceScope(RandomSource* source) : previous_(tls_source) { tls_source = source; }
  ~SourceScope() { tls_source = previous_; }
  SourceScope(const SourceScope&) = delete;
  SourceScope& operator=(const SourceScope&) = delete;

 private:
  RandomSource* previous_;
};

struct OqsKemDeleter {
  void operator()(OQS_KEM* kem) const { OQS_KEM_free(kem); }
};

class OqsKem final : public KemSuite {
 public:
  OqsKem(std::string name, std::string algorithm, OQS_KEM* kem)
      : name_(std::move(name)), algorithm_(std::move(algorithm)), kem_(kem) {}

  std::string_view name() const noexcept override { return name_; }
  std::string_view algorithm() const noexcept override { return algorithm_; }
  KemSizes sizes() const noexcept override {
    return {kem_->length_secret_key, kem_->length_public_key, kem_->length_ciphertext,
            kem_->length_shared_secret};
  }

 protected:
  KemKeyPair do_keygen(RandomSource& rng) const override {
    SourceScope scope(&rng);
    KemKeyPair pair{Bytes(kem_->length_public_key), Bytes(kem_->length_secret_key)};
    if (OQS_KEM_keypair(kem_.get(), pair.pk.data(), pair.sk.data()) != OQS_SUCCESS) {
      throw SuiteUnavailable(name_ + ": key generation failed");
    }
    return pair;
  }

  RawEncapsulation do_encaps(ByteView pk, RandomSource& rng) const override {
    SourceScope scope(&rng);
    RawEncapsulation out{Bytes(kem_->length_ciphertext), Bytes(kem_->length_shared_secret)};
    if (OQS_KEM_encaps(kem_.get(), out.ct.data(), out.secret.data(), pk.data()) != OQS_SUCCESS) {
      throw SuiteUnavailable(name_ + ": encapsulation failed");
    }
    return out;
  }

  std::optional<Bytes> do_decaps(ByteView sk, ByteView ct) const override {
    Bytes secret(kem_->length_shared_secret);
    if (OQS_KEM_decaps(kem_.get(), secret.data(), ct.data(), sk.data()) != OQS_SUCCESS) {
      return std::nullopt;
    }
    return secret;
  }

 private:
  std::string name_;
  std::string algorithm_;
  std::unique_ptr<OQS_KEM, OqsKemDeleter> kem_;
};

const char* oqs_identifier(std::string_view name) {
  if (name == "kyber") return OQS_KEM_alg_kyber_512;
  if (name == "mceliece") return OQS_KEM_alg_classic_mceliece_348864;
  if (name == "bike") return OQS_KEM_alg_bike_l1;
  if (name == "hqc") return OQS_KEM_alg_hqc_128;
  return nullptr;
}

}  // namespace

KemHandle make_oqs_kem(std::string_view name) {
  const char* id = oqs_identifier(name);
  if (id == nullptr) return nullptr;
  install_rng_hook();
  OQS_KEM* kem = OQS_KEM_new(id);
  if (kem == nullptr) return nullptr;
  return std::make_shared<OqsKem>(std::string(name), id, kem);
}

#else

KemHandle make_oqs_kem(std::string_view) { return nullptr; }

#endif

}  // namespace pqaka::crypto::detail
