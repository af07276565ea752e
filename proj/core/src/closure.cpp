#include "pqaka/closure.hpp"

#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/errors.hpp"
#include "pqaka/protocol.hpp"

namespace pqaka::attacks {

using crypto::PrfIndex;

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::kLongTermKey: return "K";
    case Kind::kKemSecretKey: return "kem_sk";
    case Kind::kKemPublicKey: return "kem_pk";
    case Kind::kKemCiphertext: return "kem_ct";
    case Kind::kKemSecret: return "kem_secret";
    case Kind::kRatchetKey: return "K_S";
    case Kind::kRatchetInput: return "K_S'";
    case Kind::kRsn: return "R_SN";
    case Kind::kRsnPrime: return "R_SN'";
    case Kind::kConc: return "CONC";
    case Kind::kMac: return "MAC";
    case Kind::kAk: return "f5";
    case Kind::kCk: return "CK";
    case Kind::kIk: return "IK";
    case Kind::kXres: return "XRES";
    case Kind::kXresStar: return "XRES*";
    case Kind::kHxresStar: return "HXRES*";
    case Kind::kKausf: return "K_ausf";
    case Kind::kKseaf: return "K_seaf";
    case Kind::kK3: return "K3";
    case Kind::kChannelKey: return "channel_key";
    case Kind::kSealed: return "sealed";
    case Kind::kTag: return "MAC_U";
    case Kind::kPlaintext: return "plaintext";
    case Kind::kSupi: return "SUPI";
    case Kind::kIdSn: return "ID_SN";
    case Kind::kIdHn: return "ID_HN";
    case Kind::kGuti: return "GUTI";
  }
  return "?";
}

bool Knowledge::add(Kind kind, ByteView value, std::size_t depth) {
  return facts_.emplace(Fact{kind, Bytes(value.begin(), value.end())}, depth).second;
}

bool Knowledge::contains(Kind kind, ByteView value) const {
  return facts_.contains(Fact{kind, Bytes(value.begin(), value.end())});
}

bool Knowledge::contains_value(ByteView value) const { return depth_of(value).has_value(); }

std::optional<std::size_t> Knowledge::depth_of(ByteView value) const {
  std::optional<std::size_t> best;
  for (const auto& [fact, depth] : facts_) {
    if (std::ranges::equal(fact.value, value) && (!best || depth < *best)) best = depth;
  }
  return best;
}

std::vector<Bytes> Knowledge::of(Kind kind) const {
  std::vector<Bytes> out;
  for (const auto& [fact, depth] : facts_) {
    if (fact.kind == kind) out.push_back(fact.value);
  }
  return out;
}

void learn_message(Knowledge& k, const wire::Message& msg) {
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, wire::IdResponseMsg>) {
          k.add(Kind::kKemCiphertext, m.c1);
          k.add(Kind::kSealed, m.suci_conc);
          k.add(Kind::kTag, m.mac_u);
          k.add(Kind::kIdHn, as_bytes(m.id_hn));
        } else if constexpr (std::is_same_v<T, wire::SnToHnIdentMsg>) {
          k.add(Kind::kKemCiphertext, m.c1);
          k.add(Kind::kSealed, m.suci_conc);
          k.add(Kind::kTag, m.mac_u);
          k.add(Kind::kRsn, m.r_sn);
        } else if constexpr (std::is_same_v<T, wire::HnToSnAuthMsg>) {
          k.add(Kind::kConc, m.autn.conc);
          k.add(Kind::kMac, m.autn.mac);
          k.add(Kind::kHxresStar, m.hxres_star);
          k.add(Kind::kSealed, m.m);
          if (m.c2) k.add(Kind::kKemCiphertext, *m.c2);
        } else if constexpr (std::is_same_v<T, wire::ChallengeMsg>) {
          k.add(Kind::kConc, m.autn.conc);
          k.add(Kind::kMac, m.autn.mac);
          if (m.c2) k.add(Kind::kKemCiphertext, *m.c2);
        } else if constexpr (std::is_same_v<T, wire::ResponseMsg>) {
          k.add(Kind::kXresStar, m.res_star);
        } else if constexpr (std::is_same_v<T, wire::GutiIdMsg>) {
          k.add(Kind::kGuti, m.guti);
        } else if constexpr (std::is_same_v<T, wire::GutiSnToHnMsg>) {
          k.add(Kind::kSupi, as_bytes(m.supi));
          k.add(Kind::kRsnPrime, m.r_sn_prime);
          k.add(Kind::kRsn, m.r_sn);
        } else if constexpr (std::is_same_v<T, wire::GutiAssignMsg>) {
          k.add(Kind::kGuti, m.guti_new);
          k.add(Kind::kRsnPrime, m.r_sn_prime_new);
        } else if constexpr (std::is_same_v<T, wire::SecuredMsg>) {
          k.add(Kind::kSealed, m.sealed);
        }
      },
      msg);
}

void learn_radio(Knowledge& k, const sim::SessionTranscript& transcript) {
  auto learn_bytes = [&](ByteView b) {
    try {
      learn_message(k, wire::decode(b));
    } catch (const ParseError&) {
    }
  };
  for (const auto& e : transcript.entries()) {
    if (e.channel != sim::ChannelKind::kRadio) continue;
    learn_bytes(e.bytes);
    if (e.delivered_bytes) learn_bytes(*e.delivered_bytes);
  }
}

namespace {

class Round {
 public:
  Round(const Knowledge& snapshot, Knowledge& out, std::size_t depth, ClosureStats& stats)
      : snap_(snapshot), out_(out), depth_(depth), stats_(stats) {}

  const std::vector<Bytes>& of(Kind kind) {
    auto it = cache_.find(kind);
    if (it == cache_.end()) it = cache_.emplace(kind, snap_.of(kind)).first;
    return it->second;
  }
  void add(Kind kind, ByteView value) { added_ |= out_.add(kind, value, depth_); }
  bool added() const noexcept { return added_; }
  ClosureStats& stats() { return stats_; }
  const Knowledge& snapshot() const { return snap_; }

 private:
  const Knowledge& snap_;
  Knowledge& out_;
  std::size_t depth_;
  ClosureStats& stats_;
  std::map<Kind, std::vector<Bytes>> cache_;
  bool added_ = false;
};

SharedKey256 key32(ByteView b) { return SharedKey256::from(b); }

void rule_decaps(Round& r, const crypto::KemSuite& suite) {
  const auto sizes = suite.sizes();
  for (const auto& sk : r.of(Kind::kKemSecretKey)) {
    if (sk.size() != sizes.sk) continue;
    for (const auto& ct : r.of(Kind::kKemCiphertext)) {
      if (ct.size() != sizes.ct) continue;
      if (auto s = suite.decaps(sk, ct)) r.add(Kind::kKemSecret, *s);
    }
  }
}

void learn_plaintext(Round& r, ByteView pt) {
  r.add(Kind::kPlaintext, pt);
  if (auto suci = parse_suci_plaintext(pt)) {
    r.add(Kind::kSupi, as_bytes(suci->supi));
    r.add(Kind::kKemPublicKey, suci->pk_u);
    r.add(Kind::kIdSn, as_bytes(suci->id_sn));
    return;
  }
  try {
    auto msg = wire::decode(pt);
    if (const auto* a = std::get_if<wire::GutiAssignMsg>(&msg)) {
      r.add(Kind::kGuti, a->guti_new);
      r.add(Kind::kRsnPrime, a->r_sn_prime_new);
      return;
    }
  } catch (const ParseError&) {
  }
  if (auto binding = parse_binding_plaintext(pt)) {
    r.add(Kind::kKseaf, binding->k_seaf);
    r.add(Kind::kSupi, as_bytes(binding->supi));
  }
}

void rule_aead_open(Round& r) {
  std::vector<Bytes> keys;
  for (const auto& [fact, depth] : r.snapshot().facts()) {
    if (fact.value.size() == 32) keys.push_back(fact.value);
  }
  for (const auto& sealed : r.of(Kind::kSealed)) {
    if (sealed.size() <= crypto::kAeadTagSize) continue;
    for (const auto& key : keys) {
      ++r.stats().aead_attempts;
      if (auto pt = crypto::aead_open(key32(key), sealed)) {
        ++r.stats().aead_successes;
        learn_plaintext(r, *pt);
      }
    }
  }
}

void xor_rule(Round& r, Kind a, Kind b, Kind out) {
  for (const auto& x : r.of(a)) {
    for (const auto& y : r.of(b)) r.add(out, key32(x) ^ key32(y));
  }
}

void rule_xor(Round& r) {
  xor_rule(r, Kind::kRatchetKey, Kind::kRsnPrime, Kind::kRatchetInput);
  xor_rule(r, Kind::kConc, Kind::kAk, Kind::kRsn);
  xor_rule(r, Kind::kConc, Kind::kRsn, Kind::kAk);
  xor_rule(r, Kind::kXresStar, Kind::kAk, Kind::kK3);
  xor_rule(r, Kind::kK3, Kind::kXresStar, Kind::kAk);
  xor_rule(r, Kind::kK3, Kind::kAk, Kind::kXresStar);
}

std::vector<Bytes> anchors(Round& r) {
  std::vector<Bytes> out = r.of(Kind::kKemSecret);
  const auto& in = r.of(Kind::kRatchetInput);
  out.insert(out.end(), in.begin(), in.end());
  return out;
}

void rule_prf(Round& r) {
  const auto stars = anchors(r);
  for (const auto& kb : r.of(Kind::kLongTermKey)) {
    const auto k = key32(kb);
    for (const auto& s : stars) {
      r.add(Kind::kXres, crypto::prf_f(PrfIndex::kF2, k, {s}));
      r.add(Kind::kCk, crypto::prf_f(PrfIndex::kF3, k, {s}));
      r.add(Kind::kIk, crypto::prf_f(PrfIndex::kF4, k, {s}));
      r.add(Kind::kAk, crypto::prf_f(PrfIndex::kF5, k, {s}));
      for (const auto& rsn : r.of(Kind::kRsn)) {
        r.add(Kind::kMac, crypto::prf_f(PrfIndex::kF1, k, {s, rsn}));
      }
    }
  }
}

void rule_kdf(Round& r) {
  const auto stars = anchors(r);
  const auto& ids = r.of(Kind::kIdSn);
  for (const auto& ck : r.of(Kind::kCk)) {
    for (const auto& ik : r.of(Kind::kIk)) {
      for (const auto& s : stars) {
        for (const auto& id : ids) {
          for (const auto& xres : r.of(Kind::kXres)) {
            r.add(Kind::kXresStar, crypto::kdf({ck, ik, s, xres, id}));
          }
          for (const auto& conc : r.of(Kind::kConc)) {
            r.add(Kind::kKausf, crypto::kdf({ck, ik, s, conc, id}));
          }
        }
      }
    }
  }
  for (const auto& kausf : r.of(Kind::kKausf)) {
    for (const auto& id : ids) r.add(Kind::kKseaf, crypto::kdf({kausf, id}));
  }
  for (const auto& kseaf : r.of(Kind::kKseaf)) {
    r.add(Kind::kChannelKey, assignment_channel_key(key32(kseaf)));
  }
  for (const auto& rsn : r.of(Kind::kRsn)) {
    for (const auto& xs : r.of(Kind::kXresStar)) {
      r.add(Kind::kHxresStar, crypto::hash_h({rsn, xs}));
    }
    for (const auto& s : stars) r.add(Kind::kRatchetKey, crypto::hash_h({s, rsn}));
  }
}

}  // namespace

ClosureStats close(Knowledge& k, const crypto::KemSuite& suite, std::size_t max_depth) {
  ClosureStats stats;
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    const Knowledge snapshot = k;
    Round r(snapshot, k, depth, stats);
    rule_decaps(r, suite);
    rule_aead_open(r);
    rule_xor(r);
    rule_prf(r);
    rule_kdf(r);
    stats.rounds = depth;
    if (!r.added()) {
      stats.saturated = true;
      break;
    }
  }
  return stats;
}

}  // namespace pqaka::attacks
