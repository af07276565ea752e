#include "pqaka/crypto/symmetric.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <memory>

#include "pqaka/errors.hpp"

namespace pqaka::crypto {

namespace {

void require_inputs(InputList inputs, const char* what) {
  if (inputs.empty()) throw UsageError(std::string(what) + ": empty input list");
}

void append_u32_be(Bytes& out, std::size_t value) {
  if (value > 0xffffffffu) throw EncodingError("field longer than 2^32-1 bytes");
  out.push_back(static_cast<std::uint8_t>(value >> 24));
  out.push_back(static_cast<std::uint8_t>(value >> 16));
  out.push_back(static_cast<std::uint8_t>(value >> 8));
  out.push_back(static_cast<std::uint8_t>(value));
}

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter>;

constexpr std::array<std::uint8_t, 12> kZeroNonce{};

}  // namespace

Bytes length_prefixed(InputList inputs) {
  std::size_t total = 0;
  for (auto in : inputs) total += 4 + in.size();
  Bytes out;
  out.reserve(total);
  for (auto in : inputs) {
    append_u32_be(out, in.size());
    out.insert(out.end(), in.begin(), in.end());
  }
  return out;
}

Block256 sha256(ByteView data) {
  Block256 out;
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw Error("SHA-256 failed");
  }
  return out;
}

Tag256 hmac_tag(const SharedKey256& key, ByteView data) {
  Tag256 out;
  unsigned int len = 0;
  if (HMAC(EVP_sha256(), key.data.data(), static_cast<int>(key.size()), data.data(), data.size(),
           out.data.data(), &len) == nullptr ||
      len != out.size()) {
    throw Error("HMAC-SHA-256 failed");
  }
  return out;
}

bool hmac_verify(const SharedKey256& key, ByteView data, const Tag256& tag) {
  const Tag256 expected = hmac_tag(key, data);
  return constant_time_equal(expected, tag);
}

SharedKey256 prf_f(PrfIndex index, const SharedKey256& key, InputList inputs) {
  require_inputs(inputs, "prf_f");
  Bytes message;
  message.push_back(static_cast<std::uint8_t>(index));
  const Bytes body = length_prefixed(inputs);
  message.insert(message.end(), body.begin(), body.end());
  return hmac_tag(key, message);
}

SharedKey256 kdf(InputList inputs) {
  require_inputs(inputs, "kdf");
  return sha256(length_prefixed(inputs));
}

Block256 hash_h(InputList inputs) {
  require_inputs(inputs, "hash_h");
  return sha256(length_prefixed(inputs));
}

Bytes aead_seal(const SharedKey256& key, ByteView plaintext) {
  if (plaintext.empty()) throw UsageError("aead_seal: empty plaintext");
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw Error("EVP_CIPHER_CTX_new failed");
  Bytes out(plaintext.size() + kAeadTagSize);
  int len = 0;
  bool ok = EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data.data(),
                               kZeroNonce.data()) == 1;
  ok = ok && EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(),
                               static_cast<int>(plaintext.size())) == 1;
  int tail = 0;
  ok = ok && EVP_EncryptFinal_ex(ctx.get(), out.data() + len, &tail) == 1;
  ok = ok && EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kAeadTagSize,
                                 out.data() + plaintext.size()) == 1;
  if (!ok) throw Error("AES-256-GCM seal failed");
  return out;
}

std::optional<Bytes> aead_open(const SharedKey256& key, ByteView sealed) {
  if (sealed.size() <= kAeadTagSize) return std::nullopt;
  const std::size_t body = sealed.size() - kAeadTagSize;
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw Error("EVP_CIPHER_CTX_new failed");
  Bytes out(body);
  std::array<std::uint8_t, kAeadTagSize> tag{};
  std::copy(sealed.begin() + static_cast<std::ptrdiff_t>(body), sealed.end(), tag.begin());
  int len = 0;
  bool ok = EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data.data(),
                               kZeroNonce.data()) == 1;
  ok = ok && EVP_DecryptUpdate(ctx.get(), out.data(), &len, sealed.data(),
                               static_cast<int>(body)) == 1;
  ok = ok && EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kAeadTagSize, tag.data()) == 1;
  int tail = 0;
  ok = ok && EVP_DecryptFinal_ex(ctx.get(), out.data() + len, &tail) == 1;
  if (!ok) {
    secure_wipe(out);
    return std::nullopt;
  }
  return out;
}

bool constant_time_equal(ByteView a, ByteView b) noexcept {
  if (a.size() != b.size()) return false;
  return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace pqaka::crypto
