#include "pqaka/protocol.hpp"

#include <array>

#include "pqaka/crypto/symmetric.hpp"

namespace pqaka {

namespace {

constexpr std::string_view kAssignmentLabel = "pqaka guti assignment";

/// Splits a length-prefixed buffer into exactly `count` fields.
template <std::size_t Count>
std::optional<std::array<ByteView, Count>> split_fields(ByteView in) {
  std::array<ByteView, Count> out;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < Count; ++i) {
    if (in.size() - pos < 4) return std::nullopt;
    const std::size_t n = (std::size_t{in[pos]} << 24) | (std::size_t{in[pos + 1]} << 16) |
                          (std::size_t{in[pos + 2]} << 8) | std::size_t{in[pos + 3]};
    pos += 4;
    if (in.size() - pos < n) return std::nullopt;
    out[i] = in.subspan(pos, n);
    pos += n;
  }
  if (pos != in.size()) return std::nullopt;
  return out;
}

}  // namespace

std::string_view to_string(IdentificationPath path) noexcept {
  return path == IdentificationPath::kSupi ? "supi" : "guti";
}

Bytes suci_plaintext(std::string_view supi, ByteView pk_u, std::string_view id_sn) {
  const std::array<ByteView, 3> fields{as_bytes(supi), pk_u, as_bytes(id_sn)};
  return crypto::length_prefixed(fields);
}

std::optional<SuciContents> parse_suci_plaintext(ByteView plaintext) {
  auto fields = split_fields<3>(plaintext);
  if (!fields) return std::nullopt;
  return SuciContents{to_string((*fields)[0]), Bytes((*fields)[1].begin(), (*fields)[1].end()),
                      to_string((*fields)[2])};
}

Bytes binding_plaintext(const SharedKey256& k_seaf, std::string_view supi) {
  return concat({k_seaf, as_bytes(supi)});
}

std::optional<BindingContents> parse_binding_plaintext(ByteView plaintext) {
  if (plaintext.size() <= SharedKey256::kSize) return std::nullopt;
  return BindingContents{SharedKey256::from(plaintext.first(SharedKey256::kSize)),
                         to_string(plaintext.subspan(SharedKey256::kSize))};
}

SharedKey256 assignment_channel_key(const SharedKey256& k_seaf) {
  return crypto::kdf({k_seaf, as_bytes(kAssignmentLabel)});
}

Block256 supi_session_id(ByteView c1, const Block256& r_sn) { return crypto::hash_h({c1, r_sn}); }

Block256 guti_session_id(std::string_view supi, const Block256& r_sn) {
  return crypto::hash_h({as_bytes(supi), r_sn});
}

}  // namespace pqaka
