#include "pqaka/sn.hpp"

#include <nlohmann/json.hpp>

#include "pqaka/crypto/symmetric.hpp"
#include "pqaka/errors.hpp"
#include "pqaka/persistence.hpp"

namespace pqaka {

ServingNetwork::ServingNetwork(std::string id_sn) {
  if (id_sn.empty()) throw UsageError("SN requires an identity");
  state_.id_sn = std::move(id_sn);
}

ForwardedIdentification ServingNetwork::forward_identification(const wire::IdResponseMsg& msg,
                                                               RandomSource& rng) {
  SnPending p;
  p.path = IdentificationPath::kSupi;
  p.r_sn = rng.draw<32>();
  const Block256 sid = supi_session_id(msg.c1, p.r_sn);
  state_.pending.insert_or_assign(sid, p);
  return {sid, wire::SnToHnIdentMsg{msg.c1, msg.suci_conc, msg.mac_u, p.r_sn}};
}

std::variant<ForwardedGuti, wire::IdRequestMsg> ServingNetwork::resolve_guti(
    const wire::GutiIdMsg& msg, RandomSource& rng) {
  auto it = state_.guti_table.find(msg.guti);
  if (it == state_.guti_table.end()) return wire::IdRequestMsg{};
  SnPending p;
  p.path = IdentificationPath::kGuti;
  p.r_sn = rng.draw<32>();
  p.resolved_supi = it->second.supi;
  const Block256 sid = guti_session_id(it->second.supi, p.r_sn);
  state_.pending.insert_or_assign(sid, p);
  return ForwardedGuti{sid, wire::GutiSnToHnMsg{it->second.supi, it->second.r_sn_prime, p.r_sn}};
}

std::optional<wire::ChallengeMsg> ServingNetwork::forward_challenge(
    const Block256& session_id, const wire::HnToSnAuthMsg& msg) {
  auto it = state_.pending.find(session_id);
  if (it == state_.pending.end()) return std::nullopt;
  const bool guti_path = it->second.path == IdentificationPath::kGuti;
  if (guti_path == msg.c2.has_value()) {
    state_.pending.erase(it);
    return std::nullopt;
  }
  it->second.hxres_star = msg.hxres_star;
  it->second.autn = msg.autn;
  it->second.m = msg.m;
  return wire::ChallengeMsg{msg.autn, msg.c2};
}

std::optional<SnVerification> ServingNetwork::verify_response(const Block256& session_id,
                                                              const wire::ResponseMsg& msg) {
  auto it = state_.pending.find(session_id);
  if (it == state_.pending.end() || !it->second.hxres_star) return std::nullopt;
  const SnPending p = std::move(it->second);
  state_.pending.erase(it);

  const Block256 check = crypto::hash_h({p.r_sn, msg.res_star});
  if (!crypto::constant_time_equal(check, *p.hxres_star)) return std::nullopt;

  const Block256 f5 = p.autn->conc ^ p.r_sn;
  SharedKey256 k3 = msg.res_star ^ f5;
  auto plaintext = crypto::aead_open(k3, *p.m);
  secure_wipe(k3.data);
  if (!plaintext) return std::nullopt;
  auto binding = parse_binding_plaintext(*plaintext);
  secure_wipe(*plaintext);
  if (!binding) return std::nullopt;
  if (p.resolved_supi && *p.resolved_supi != binding->supi) return std::nullopt;

  SnVerification out;
  out.supi = binding->supi;
  out.k_seaf = binding->k_seaf;
  out.confirm = wire::ConfirmMsg{true};
  state_.completed.insert_or_assign(session_id, SnCompleted{binding->supi, binding->k_seaf});
  return out;
}

std::optional<SnAssignment> ServingNetwork::issue_assignment(const Block256& session_id,
                                                            RandomSource& rng) {
  auto it = state_.completed.find(session_id);
  if (it == state_.completed.end()) return std::nullopt;
  SnAssignment out;
  out.assignment = assign_guti(it->second.supi, rng);
  out.secured = wire::SecuredMsg{
      crypto::aead_seal(assignment_channel_key(it->second.k_seaf), wire::encode(out.assignment))};
  return out;
}

wire::GutiAssignMsg ServingNetwork::assign_guti(const std::string& supi, RandomSource& rng) {
  Guti guti = rng.draw<16>();
  while (state_.guti_table.contains(guti)) guti = rng.draw<16>();
  const Block256 r_sn_prime = rng.draw<32>();

  std::erase_if(state_.guti_table, [&](const auto& kv) { return kv.second.supi == supi; });
  state_.guti_table.emplace(guti, GutiEntry{supi, r_sn_prime});
  if (table_path_) save_guti_table(*table_path_);
  return wire::GutiAssignMsg{guti, r_sn_prime};
}

void ServingNetwork::abort_session(const Block256& session_id) { state_.pending.erase(session_id); }

void ServingNetwork::load_guti_table(const std::filesystem::path& path) {
  for (const auto& line : persistence::read_lines(path)) {
    const auto j = nlohmann::json::parse(line);
    state_.guti_table.insert_or_assign(
        Guti::from(from_hex(j.at("guti").get<std::string>())),
        GutiEntry{j.at("supi").get<std::string>(),
                  Block256::from(from_hex(j.at("r_sn_prime").get<std::string>()))});
  }
}

void ServingNetwork::save_guti_table(const std::filesystem::path& path) const {
  std::vector<std::string> lines;
  for (const auto& [guti, entry] : state_.guti_table) {
    lines.push_back(nlohmann::json{{"guti", to_hex(guti)},
                                   {"supi", entry.supi},
                                   {"r_sn_prime", to_hex(entry.r_sn_prime)}}
                        .dump());
  }
  persistence::write_lines_atomic(path, lines);
}

}  // namespace pqaka
