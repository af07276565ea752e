#include "pqaka/hn.hpp"

#include <nlohmann/json.hpp>

#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/errors.hpp"
#include "pqaka/persistence.hpp"

namespace pqaka {

using crypto::PrfIndex;

HomeNetwork::HomeNetwork(HnState state, crypto::KemHandle suite, HnHooks hooks)
    : state_(std::move(state)), suite_(std::move(suite)), hooks_(hooks) {
  if (!suite_) throw UsageError("HN requires a KEM suite");
}

HnState HomeNetwork::provision(std::string id_hn, const crypto::KemSuite& suite,
                               RandomSource& rng) {
  HnState s;
  s.id_hn = std::move(id_hn);
  s.kem_pair = suite.keygen(rng);
  return s;
}

void HomeNetwork::add_subscriber(std::string supi, const SharedKey256& k) {
  if (supi.empty()) throw UsageError("empty SUPI");
  SubscriberRecord rec{supi, k, std::nullopt, std::nullopt};
  state_.registry.insert_or_assign(std::move(supi), std::move(rec));
}

void HomeNetwork::allow_serving_network(std::string id_sn) {
  state_.sn_allowlist.insert(std::move(id_sn));
}

const SubscriberRecord* HomeNetwork::find_subscriber(std::string_view supi) const {
  auto it = state_.registry.find(supi);
  return it == state_.registry.end() ? nullptr : &it->second;
}

std::optional<Identification> HomeNetwork::identify(const wire::SnToHnIdentMsg& msg,
                                                    std::string_view claimed_id_sn) const {
  if (msg.c1.size() != suite_->sizes().ct) return std::nullopt;
  auto k_s1 = suite_->decaps(state_.kem_pair.sk, msg.c1);
  if (!k_s1) return std::nullopt;

  const bool mac_ok = crypto::hmac_verify(*k_s1, msg.suci_conc, msg.mac_u);
  auto plaintext = crypto::aead_open(*k_s1, msg.suci_conc);
  secure_wipe(k_s1->data);
  if (!mac_ok || !plaintext) return std::nullopt;

  auto suci = parse_suci_plaintext(*plaintext);
  secure_wipe(*plaintext);
  if (!suci) return std::nullopt;
  if (!hooks_.skip_id_sn_check) {
    if (suci->id_sn != claimed_id_sn) return std::nullopt;
    if (!state_.sn_allowlist.contains(suci->id_sn)) return std::nullopt;
  }
  if (!find_subscriber(suci->supi)) return std::nullopt;
  return Identification{std::move(suci->supi), std::move(suci->pk_u), std::move(suci->id_sn)};
}

AuthVectorBundle HomeNetwork::derive_vector(SubscriberRecord& record, const SharedKey256& k_star,
                                            const Block256& r_sn, std::string_view id_sn_str,
                                            std::optional<Bytes> c2,
                                            const Block256& session_id) {
  const SharedKey256& k = record.k;
  const auto id_sn = as_bytes(id_sn_str);

  const Tag256 mac = crypto::prf_f(PrfIndex::kF1, k, {k_star, r_sn});
  const Block256 xres = crypto::prf_f(PrfIndex::kF2, k, {k_star});
  const Block256 ak = crypto::prf_f(PrfIndex::kF5, k, {k_star});
  const Block256 conc = ak ^ r_sn;
  const SharedKey256 ck = crypto::prf_f(PrfIndex::kF3, k, {k_star});
  const SharedKey256 ik = crypto::prf_f(PrfIndex::kF4, k, {k_star});
  const Block256 xres_star = crypto::kdf({ck, ik, k_star, xres, id_sn});
  const Block256 hxres_star = crypto::hash_h({r_sn, xres_star});
  const SharedKey256 k_ausf = crypto::kdf({ck, ik, k_star, conc, id_sn});
  const SharedKey256 k_seaf = crypto::kdf({k_ausf, id_sn});
  const SharedKey256 k3 = xres_star ^ ak;
  Bytes m = crypto::aead_seal(k3, binding_plaintext(k_seaf, record.supi));

  record.k_s_staged = crypto::hash_h({k_star, r_sn});
  state_.pending.insert_or_assign(session_id,
                                  PendingAuthentication{record.supi, xres_star, k_seaf});

  AuthVectorBundle out;
  out.autn = wire::Autn{conc, mac};
  out.hxres_star = hxres_star;
  out.m = std::move(m);
  out.c2 = std::move(c2);
  out.retained = {xres_star, k_seaf, k3};
  out.session_id = session_id;
  return out;
}

AuthVectorBundle HomeNetwork::auth_vector(std::string_view supi, ByteView pk_u,
                                          const Block256& r_sn, std::string_view id_sn,
                                          const Block256& session_id, RandomSource& rng) {
  auto it = state_.registry.find(supi);
  if (it == state_.registry.end()) throw UsageError("unknown subscriber");
  auto [c2, k_s2] = suite_->encaps(pk_u, rng);
  auto out = derive_vector(it->second, k_s2, r_sn, id_sn, std::move(c2), session_id);
  secure_wipe(k_s2.data);
  return out;
}

std::optional<AuthVectorBundle> HomeNetwork::guti_auth_vector(const wire::GutiSnToHnMsg& msg,
                                                              std::string_view id_sn) {
  auto it = state_.registry.find(msg.supi);
  if (it == state_.registry.end() || !it->second.k_s) return std::nullopt;
  if (!hooks_.skip_id_sn_check && !state_.sn_allowlist.contains(id_sn)) return std::nullopt;
  SharedKey256 k_star = *it->second.k_s ^ msg.r_sn_prime;
  auto out = derive_vector(it->second, k_star, msg.r_sn, id_sn, std::nullopt,
                           guti_session_id(msg.supi, msg.r_sn));
  secure_wipe(k_star.data);
  return out;
}

bool HomeNetwork::finalize(const wire::ConfirmMsg& confirm, const Block256& session_id) {
  if (!confirm.ok) return false;
  auto pending = state_.pending.find(session_id);
  if (pending == state_.pending.end()) return false;
  auto rec = state_.registry.find(pending->second.supi);
  state_.pending.erase(pending);
  if (rec == state_.registry.end() || !rec->second.k_s_staged) return false;
  rec->second.k_s = *rec->second.k_s_staged;
  rec->second.k_s_staged.reset();
  if (registry_path_) save_registry(*registry_path_);
  return true;
}

wire::Message HomeNetwork::handle_request(const wire::Message& request,
                                          std::string_view claimed_id_sn, RandomSource& rng,
                                          Block256& session_id) {
  if (const auto* ident = std::get_if<wire::SnToHnIdentMsg>(&request)) {
    auto who = identify(*ident, claimed_id_sn);
    if (!who) return wire::HnAbortMsg{};
    session_id = supi_session_id(ident->c1, ident->r_sn);
    try {
      return auth_vector(who->supi, who->pk_u, ident->r_sn, claimed_id_sn, session_id, rng)
          .message();
    } catch (const EncodingError&) {
      return wire::HnAbortMsg{};
    }
  }
  if (const auto* guti = std::get_if<wire::GutiSnToHnMsg>(&request)) {
    auto bundle = guti_auth_vector(*guti, claimed_id_sn);
    if (!bundle) return wire::HnAbortMsg{};
    session_id = bundle->session_id;
    return bundle->message();
  }
  return wire::HnAbortMsg{};
}

void HomeNetwork::load_registry(const std::filesystem::path& path) {
  for (const auto& line : persistence::read_lines(path)) {
    const auto j = nlohmann::json::parse(line);
    SubscriberRecord rec;
    rec.supi = j.at("supi").get<std::string>();
    rec.k = SharedKey256::from(from_hex(j.at("k").get<std::string>()));
    if (j.contains("k_s") && !j["k_s"].is_null()) {
      rec.k_s = SharedKey256::from(from_hex(j["k_s"].get<std::string>()));
    }
    state_.registry.insert_or_assign(rec.supi, std::move(rec));
  }
}

void HomeNetwork::save_registry(const std::filesystem::path& path) const {
  std::vector<std::string> lines;
  for (const auto& [supi, rec] : state_.registry) {
    nlohmann::json j{{"supi", supi}, {"k", to_hex(rec.k)}};
    j["k_s"] = rec.k_s ? nlohmann::json(to_hex(*rec.k_s)) : nlohmann::json(nullptr);
    lines.push_back(j.dump());
  }
  persistence::write_lines_atomic(path, lines);
}

}  // namespace pqaka
