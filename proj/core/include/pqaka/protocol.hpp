#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pqaka/bytes.hpp"

namespace pqaka {

/// Anchor keys derived at the end of an authentication run.
struct SessionKeys {
  SharedKey256 ck;
  SharedKey256 ik;
  SharedKey256 k_ausf;
  SharedKey256 k_seaf;
  friend bool operator==(const SessionKeys&, const SessionKeys&) = default;
};

/// Which identifier the UE presented in a run.
enum class IdentificationPath { kSupi, kGuti };

std::string_view to_string(IdentificationPath path) noexcept;

/// Plaintext of SUCI_conc: length-prefixed SUPI, pk_U and ID_SN.
Bytes suci_plaintext(std::string_view supi, ByteView pk_u, std::string_view id_sn);

struct SuciContents {
  std::string supi;
  Bytes pk_u;
  std::string id_sn;
};
std::optional<SuciContents> parse_suci_plaintext(ByteView plaintext);

/// Plaintext of M: K_seaf (32 bytes) followed by the SUPI bytes.
Bytes binding_plaintext(const SharedKey256& k_seaf, std::string_view supi);

struct BindingContents {
  SharedKey256 k_seaf;
  std::string supi;
};
std::optional<BindingContents> parse_binding_plaintext(ByteView plaintext);

/// Key of the SN<->UE channel that carries the GUTI assignment.
SharedKey256 assignment_channel_key(const SharedKey256& k_seaf);

/// Session identifiers shared by SN and HN without extra wire fields.
Block256 supi_session_id(ByteView c1, const Block256& r_sn);
Block256 guti_session_id(std::string_view supi, const Block256& r_sn);

}  // namespace pqaka
