#include "pqaka/wire.hpp"

#include <type_traits>

#include "pqaka/errors.hpp"

namespace pqaka::wire {

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xe0) == 0xc0) {
      extra = 1;
      cp = c & 0x1f;
    } else if ((c & 0xf0) == 0xe0) {
      extra = 2;
      cp = c & 0x0f;
    } else if ((c & 0xf8) == 0xf0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xc0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3f);
    }
    static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return false;
    i += extra + 1;
  }
  return true;
}

class Writer {
 public:
  explicit Writer(MessageType type) { out_.push_back(static_cast<std::uint8_t>(type)); }

  void field(ByteView value) {
    const std::size_t n = value.size();
    if (n > 0xffffffffu) throw EncodingError("field too long");
    out_.push_back(static_cast<std::uint8_t>(n >> 24));
    out_.push_back(static_cast<std::uint8_t>(n >> 16));
    out_.push_back(static_cast<std::uint8_t>(n >> 8));
    out_.push_back(static_cast<std::uint8_t>(n));
    out_.insert(out_.end(), value.begin(), value.end());
  }

  void nonempty(const char* name, ByteView value) {
    if (value.empty()) throw EncodingError(std::string(name) + " must not be empty");
    field(value);
  }

  void text(const char* name, std::string_view value) {
    if (value.empty()) throw EncodingError(std::string(name) + " must not be empty");
    if (!valid_utf8(value)) throw EncodingError(std::string(name) + " is not valid UTF-8");
    field(as_bytes(value));
  }

  void optional(const char* name, const std::optional<Bytes>& value) {
    out_.push_back(value ? 1 : 0);
    if (value) nonempty(name, *value);
  }

  void flag(bool value) { field(Bytes{static_cast<std::uint8_t>(value ? 1 : 0)}); }

  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(ByteView in) : in_(in) {}

  std::size_t offset() const noexcept { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::uint8_t byte() {
    if (pos_ >= in_.size()) fail("truncated message");
    return in_[pos_++];
  }

  ByteView field() {
    if (in_.size() - pos_ < 4) fail("truncated length prefix");
    const std::size_t n = (std::size_t{in_[pos_]} << 24) | (std::size_t{in_[pos_ + 1]} << 16) |
                          (std::size_t{in_[pos_ + 2]} << 8) | std::size_t{in_[pos_ + 3]};
    if (in_.size() - pos_ - 4 < n) fail("field length exceeds message");
    pos_ += 4;
    ByteView out = in_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  Bytes nonempty(const char* name) {
    const std::size_t at = pos_;
    ByteView f = field();
    if (f.empty()) throw ParseError(std::string("empty ") + name, at);
    return Bytes(f.begin(), f.end());
  }

  template <std::size_t N>
  FixedBytes<N> fixed(const char* name) {
    const std::size_t at = pos_;
    ByteView f = field();
    if (f.size() != N) {
      throw ParseError(std::string(name) + " must be " + std::to_string(N) + " bytes", at);
    }
    return FixedBytes<N>::from(f);
  }

  std::string text(const char* name) {
    const std::size_t at = pos_;
    ByteView f = field();
    std::string s(f.begin(), f.end());
    if (s.empty()) throw ParseError(std::string("empty ") + name, at);
    if (!valid_utf8(s)) throw ParseError(std::string(name) + " is not valid UTF-8", at);
    return s;
  }

  std::optional<Bytes> optional(const char* name) {
    const std::size_t at = pos_;
    const std::uint8_t present = byte();
    if (present > 1) throw ParseError("invalid presence flag", at);
    if (present == 0) return std::nullopt;
    return nonempty(name);
  }

  bool flag() {
    const std::size_t at = pos_;
    ByteView f = field();
    if (f.size() != 1 || f[0] > 1) throw ParseError("invalid boolean flag", at);
    return f[0] == 1;
  }

  void finish() const {
    if (pos_ != in_.size()) fail("trailing bytes");
  }

 private:
  ByteView in_;
  std::size_t pos_ = 0;
};

Bytes autn_bytes(const Autn& a) { return concat({a.conc, a.mac}); }

Autn read_autn(Reader& r) {
  const auto raw = r.fixed<64>("AUTN");
  Autn a;
  std::copy(raw.data.begin(), raw.data.begin() + 32, a.conc.data.begin());
  std::copy(raw.data.begin() + 32, raw.data.end(), a.mac.data.begin());
  return a;
}

}  // namespace

MessageType type_of(const Message& msg) noexcept {
  return std::visit(
      [](const auto& m) -> MessageType {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdRequestMsg>) return MessageType::kIdRequest;
        else if constexpr (std::is_same_v<T, IdResponseMsg>) return MessageType::kIdResponse;
        else if constexpr (std::is_same_v<T, SnToHnIdentMsg>) return MessageType::kSnToHnIdent;
        else if constexpr (std::is_same_v<T, HnToSnAuthMsg>) return MessageType::kHnToSnAuth;
        else if constexpr (std::is_same_v<T, ChallengeMsg>) return MessageType::kChallenge;
        else if constexpr (std::is_same_v<T, ResponseMsg>) return MessageType::kResponse;
        else if constexpr (std::is_same_v<T, ConfirmMsg>) return MessageType::kConfirm;
        else if constexpr (std::is_same_v<T, GutiIdMsg>) return MessageType::kGutiId;
        else if constexpr (std::is_same_v<T, GutiSnToHnMsg>) return MessageType::kGutiSnToHn;
        else if constexpr (std::is_same_v<T, GutiAssignMsg>) return MessageType::kGutiAssign;
        else if constexpr (std::is_same_v<T, SecuredMsg>) return MessageType::kSecured;
        else return MessageType::kHnAbort;
      },
      msg);
}

std::string_view type_name(MessageType type) noexcept {
  switch (type) {
    case MessageType::kIdRequest: return "IdRequest";
    case MessageType::kIdResponse: return "IdResponse";
    case MessageType::kSnToHnIdent: return "SnToHnIdent";
    case MessageType::kHnToSnAuth: return "HnToSnAuth";
    case MessageType::kChallenge: return "Challenge";
    case MessageType::kResponse: return "Response";
    case MessageType::kConfirm: return "Confirm";
    case MessageType::kGutiId: return "GutiId";
    case MessageType::kGutiSnToHn: return "GutiSnToHn";
    case MessageType::kGutiAssign: return "GutiAssign";
    case MessageType::kSecured: return "Secured";
    case MessageType::kHnAbort: return "HnAbort";
  }
  return "Unknown";
}

std::optional<MessageType> peek_type(ByteView encoded) noexcept {
  if (encoded.empty()) return std::nullopt;
  const auto tag = encoded[0];
  if (tag < 0x01 || tag > 0x0c) return std::nullopt;
  return static_cast<MessageType>(tag);
}

Bytes encode(const Message& msg) {
  Writer w(type_of(msg));
  std::visit(
      [&w](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, IdResponseMsg>) {
          w.nonempty("c1", m.c1);
          w.nonempty("SUCI_conc", m.suci_conc);
          w.field(m.mac_u);
          w.text("ID_HN", m.id_hn);
        } else if constexpr (std::is_same_v<T, SnToHnIdentMsg>) {
          w.nonempty("c1", m.c1);
          w.nonempty("SUCI_conc", m.suci_conc);
          w.field(m.mac_u);
          w.field(m.r_sn);
        } else if constexpr (std::is_same_v<T, HnToSnAuthMsg>) {
          w.field(autn_bytes(m.autn));
          w.field(m.hxres_star);
          w.nonempty("M", m.m);
          w.optional("c2", m.c2);
        } else if constexpr (std::is_same_v<T, ChallengeMsg>) {
          w.field(autn_bytes(m.autn));
          w.optional("c2", m.c2);
        } else if constexpr (std::is_same_v<T, ResponseMsg>) {
          w.field(m.res_star);
        } else if constexpr (std::is_same_v<T, ConfirmMsg>) {
          w.flag(m.ok);
        } else if constexpr (std::is_same_v<T, GutiIdMsg>) {
          w.field(m.guti);
        } else if constexpr (std::is_same_v<T, GutiSnToHnMsg>) {
          w.text("SUPI", m.supi);
          w.field(m.r_sn_prime);
          w.field(m.r_sn);
        } else if constexpr (std::is_same_v<T, GutiAssignMsg>) {
          w.field(m.guti_new);
          w.field(m.r_sn_prime_new);
        } else if constexpr (std::is_same_v<T, SecuredMsg>) {
          w.nonempty("sealed payload", m.sealed);
        }
      },
      msg);
  return w.take();
}

Message decode(ByteView bytes) {
  Reader r(bytes);
  const std::uint8_t tag = r.byte();
  const auto type = peek_type(bytes);
  if (!type) throw ParseError("unknown message tag " + std::to_string(tag), 0);
  Message out;
  switch (*type) {
    case MessageType::kIdRequest:
      out = IdRequestMsg{};
      break;
    case MessageType::kIdResponse: {
      IdResponseMsg m;
      m.c1 = r.nonempty("c1");
      m.suci_conc = r.nonempty("SUCI_conc");
      m.mac_u = r.fixed<32>("MAC_U");
      m.id_hn = r.text("ID_HN");
      out = std::move(m);
      break;
    }
    case MessageType::kSnToHnIdent: {
      SnToHnIdentMsg m;
      m.c1 = r.nonempty("c1");
      m.suci_conc = r.nonempty("SUCI_conc");
      m.mac_u = r.fixed<32>("MAC_U");
      m.r_sn = r.fixed<32>("R_SN");
      out = std::move(m);
      break;
    }
    case MessageType::kHnToSnAuth: {
      HnToSnAuthMsg m;
      m.autn = read_autn(r);
      m.hxres_star = r.fixed<32>("HXRES*");
      m.m = r.nonempty("M");
      m.c2 = r.optional("c2");
      out = std::move(m);
      break;
    }
    case MessageType::kChallenge: {
      ChallengeMsg m;
      m.autn = read_autn(r);
      m.c2 = r.optional("c2");
      out = std::move(m);
      break;
    }
    case MessageType::kResponse:
      out = ResponseMsg{r.fixed<32>("RES*")};
      break;
    case MessageType::kConfirm:
      out = ConfirmMsg{r.flag()};
      break;
    case MessageType::kGutiId:
      out = GutiIdMsg{r.fixed<16>("GUTI")};
      break;
    case MessageType::kGutiSnToHn: {
      GutiSnToHnMsg m;
      m.supi = r.text("SUPI");
      m.r_sn_prime = r.fixed<32>("R_SN'");
      m.r_sn = r.fixed<32>("R_SN");
      out = std::move(m);
      break;
    }
    case MessageType::kGutiAssign: {
      GutiAssignMsg m;
      m.guti_new = r.fixed<16>("GUTI");
      m.r_sn_prime_new = r.fixed<32>("R_SN'");
      out = std::move(m);
      break;
    }
    case MessageType::kSecured:
      out = SecuredMsg{r.nonempty("sealed payload")};
      break;
    case MessageType::kHnAbort:
      out = HnAbortMsg{};
      break;
  }
  r.finish();
  return out;
}

}  // namespace pqaka::wire
