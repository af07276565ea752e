#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqaka/bytes.hpp"
#include "pqaka/random.hpp"

namespace pqaka::crypto {

/// Byte lengths a backend declares for its keys, ciphertexts and native
/// shared secret.
struct KemSizes {
  std::size_t sk = 0;
  std::size_t pk = 0;
  std::size_t ct = 0;
  std::size_t key = 0;

  friend bool operator==(const KemSizes&, const KemSizes&) = default;
};

struct KemKeyPair {
  Bytes pk;
  Bytes sk;
};

struct Encapsulation {
  Bytes ct;
  SharedKey256 key;
};

/// A (KeyGen, Encaps, Decaps) triple.
///
/// The public member functions enforce the declared lengths and normalize
/// the backend's native shared secret to 256 bits: secrets that are already
/// 32 bytes are used as-is, longer ones (HQC: 64 bytes) are compressed with
/// hash_h. Backends implement the protected do_* hooks.
class KemSuite {
 public:
  virtual ~KemSuite() = default;

  virtual std::string_view name() const noexcept = 0;
  /// Human-readable algorithm and parameter set, e.g. "Kyber512".
  virtual std::string_view algorithm() const noexcept = 0;
  virtual KemSizes sizes() const noexcept = 0;

  KemKeyPair keygen(RandomSource& rng) const;
  Encapsulation encaps(ByteView pk, RandomSource& rng) const;
  /// std::nullopt signals explicit decapsulation failure. Backends with
  /// implicit rejection return an unrelated key instead.
  std::optional<SharedKey256> decaps(ByteView sk, ByteView ct) const;

 protected:
  struct RawEncapsulation {
    Bytes ct;
    Bytes secret;
  };

  virtual KemKeyPair do_keygen(RandomSource& rng) const = 0;
  virtual RawEncapsulation do_encaps(ByteView pk, RandomSource& rng) const = 0;
  virtual std::optional<Bytes> do_decaps(ByteView sk, ByteView ct) const = 0;

 private:
  SharedKey256 normalize(ByteView secret) const;
};

using KemHandle = std::shared_ptr<const KemSuite>;

/// Insecure deterministic KEM used as a test double:
///   sk = 32 random bytes, pk = HMAC-SHA-256(sk, "pk"),
///   encaps: r = 32 random bytes, ct = r, k = hash_h(pk, r).
/// Anyone holding pk and ct can compute k. Never use outside tests.
KemHandle make_test_kem();

/// Names of every suite this build knows about, compiled in or not, in
/// report order.
std::vector<std::string> known_kem_names();
/// Names of the suites that are usable in this build.
std::vector<std::string> available_kem_names();
bool kem_available(std::string_view name);
/// Throws SuiteUnavailable (listing the available names) if `name` is not
/// registered or not compiled in.
KemHandle find_kem(std::string_view name);

}  // namespace pqaka::crypto
