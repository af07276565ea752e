#include "pqaka/sim.hpp"

#include <nlohmann/json.hpp>

#include "pqaka/errors.hpp"

namespace pqaka::sim {

std::string_view to_string(ChannelKind kind) noexcept {
  return kind == ChannelKind::kRadio ? "radio" : "core";
}

std::string_view to_string(Direction dir) noexcept {
  switch (dir) {
    case Direction::kUeToSn: return "ue->sn";
    case Direction::kSnToUe: return "sn->ue";
    case Direction::kSnToHn: return "sn->hn";
    case Direction::kHnToSn: return "hn->sn";
  }
  return "?";
}

std::string_view to_string(CompromiseTarget target) noexcept {
  switch (target) {
    case CompromiseTarget::kUeLongTermKey: return "ue.K";
    case CompromiseTarget::kHnSecretKey: return "hn.sk_H";
    case CompromiseTarget::kHnRegistry: return "hn.registry";
    case CompromiseTarget::kSnSessionKeys: return "sn.K_seaf";
  }
  return "?";
}

ByteView TranscriptEntry::received() const noexcept {
  if (!delivered) return {};
  return delivered_bytes ? ByteView(*delivered_bytes) : ByteView(bytes);
}

TranscriptEntry& SessionTranscript::append(TranscriptEntry entry) {
  entries_.push_back(std::move(entry));
  return entries_.back();
}

std::size_t SessionTranscript::count(ChannelKind kind) const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.channel == kind ? 1 : 0;
  return n;
}

const TranscriptEntry* SessionTranscript::find(wire::MessageType type) const noexcept {
  for (const auto& e : entries_) {
    if (wire::peek_type(e.bytes) == type) return &e;
  }
  return nullptr;
}

std::string SessionTranscript::to_jsonl() const {
  std::string out;
  for (const auto& e : entries_) {
    nlohmann::json j{{"step", e.step},
                     {"channel", to_string(e.channel)},
                     {"direction", to_string(e.direction)},
                     {"bytes", to_hex(e.bytes)},
                     {"delivered", e.delivered},
                     {"annotation", e.annotations}};
    if (auto t = wire::peek_type(e.bytes)) j["type"] = wire::type_name(*t);
    if (e.delivered_bytes) j["delivered_bytes"] = to_hex(*e.delivered_bytes);
    out += j.dump();
    out += '\n';
  }
  return out;
}

// -- attacker ---------------------------------------------------------------

void Attacker::tap(ChannelKind channel, RadioTap tap) {
  if (channel == ChannelKind::kCore) {
    throw ThreatModelViolation("the core network channel is confidential and integral");
  }
  taps_.push_back(std::move(tap));
}

std::optional<Bytes> Attacker::intercept(const TapEvent& event) {
  observed_.emplace_back(event.bytes.begin(), event.bytes.end());
  for (auto& t : taps_) {
    TapResult r = t(event);
    switch (r.verdict) {
      case TapVerdict::kPass: continue;
      case TapVerdict::kDrop: return std::nullopt;
      case TapVerdict::kReplace:
        injected_.push_back(r.replacement);
        return std::move(r.replacement);
    }
  }
  return Bytes(event.bytes.begin(), event.bytes.end());
}

CompromiseRecord Attacker::compromise(CompromiseTarget target, const World& world,
                                      std::size_t index) {
  CompromiseRecord rec{target, world.clock(), {}};
  switch (target) {
    case CompromiseTarget::kUeLongTermKey: {
      const auto& ue = world.ue(index);
      rec.secrets.emplace("K:" + ue.state().supi, ue.long_term_key().bytes());
      break;
    }
    case CompromiseTarget::kHnSecretKey:
      rec.secrets.emplace("sk_H", world.hn().secret_key());
      break;
    case CompromiseTarget::kHnRegistry:
      for (const auto& [supi, r] : world.hn().state().registry) {
        rec.secrets.emplace("K:" + supi, r.k.bytes());
        if (r.k_s) rec.secrets.emplace("K_S:" + supi, r.k_s->bytes());
      }
      break;
    case CompromiseTarget::kSnSessionKeys: {
      std::size_t i = 0;
      for (const auto& [sid, done] : world.sn(index).state().completed) {
        rec.secrets.emplace("K_seaf:" + std::to_string(i++) + ":" + to_hex(sid),
                            done.k_seaf.bytes());
      }
      break;
    }
  }
  compromised_.push_back(std::move(rec));
  return compromised_.back();
}

namespace {

bool session_matches(const TapEvent& e, std::optional<wire::MessageType> type,
                     std::optional<std::size_t> session) {
  return e.type == type && (!session || *session == e.session);
}

}  // namespace

RadioTap Attacker::drop_type(wire::MessageType type, std::optional<std::size_t> session) {
  return [=](const TapEvent& e) {
    return session_matches(e, type, session) ? TapResult::drop() : TapResult::pass();
  };
}

RadioTap Attacker::replace_type(wire::MessageType type, Bytes replacement,
                                std::optional<std::size_t> session) {
  return [=](const TapEvent& e) {
    return session_matches(e, type, session) ? TapResult::replace(replacement)
                                             : TapResult::pass();
  };
}

RadioTap Attacker::tamper_type(wire::MessageType type, std::function<Bytes(ByteView)> mutate,
                               std::optional<std::size_t> session) {
  return [=](const TapEvent& e) {
    return session_matches(e, type, session) ? TapResult::replace(mutate(e.bytes))
                                             : TapResult::pass();
  };
}

// -- world ------------------------------------------------------------------

World::World(crypto::KemHandle suite, std::uint64_t seed, HnHooks hn_hooks)
    : suite_(std::move(suite)), provisioning_rng_(1000 + seed), rng_(seed) {
  if (!suite_) throw UsageError("world requires a KEM suite");
  hn_ = std::make_unique<HomeNetwork>(
      HomeNetwork::provision(std::string(kDefaultIdHn), *suite_, provisioning_rng_), suite_,
      hn_hooks);
}

std::size_t World::add_serving_network(std::string id_sn) {
  hn_->allow_serving_network(id_sn);
  sns_.emplace_back(std::move(id_sn));
  return sns_.size() - 1;
}

std::size_t World::add_subscriber(std::string supi, std::optional<SharedKey256> k,
                                  UeHooks hooks) {
  const SharedKey256 key = k ? *k : provisioning_rng_.draw<32>();
  hn_->add_subscriber(supi, key);
  UeState st;
  st.supi = std::move(supi);
  st.k = key;
  st.pk_h = hn_->public_key();
  st.id_hn = hn_->state().id_hn;
  ues_.emplace_back(std::move(st), suite_, hooks);
  return ues_.size() - 1;
}

bool SessionOutcome::keys_agree() const noexcept {
  return completed && ue_k_seaf && sn_k_seaf && hn_k_seaf && *ue_k_seaf == *sn_k_seaf &&
         *sn_k_seaf == *hn_k_seaf;
}

// -- session driver ---------------------------------------------------------

namespace {

class Driver {
 public:
  Driver(World& w, std::size_t ue, std::size_t sn, SessionOptions opt, Attacker* a)
      : world_(w), ue_(w.ue(ue)), sn_(w.sn(sn)), opt_(opt), attacker_(a) {}

  SessionResult run();

 private:
  std::optional<wire::Message> radio(Direction dir, const wire::Message& msg);
  void core(Direction dir, const wire::Message& msg, bool deliver = true);
  void abort(std::string where) {
    result_.outcome.aborted_at = std::move(where);
    if (sid_) sn_.abort_session(*sid_);
    ue_.abandon_session();
  }
  bool identify();
  void authenticate();

  World& world_;
  UserEquipment& ue_;
  ServingNetwork& sn_;
  SessionOptions opt_;
  Attacker* attacker_;
  std::size_t session_ = 0;
  std::optional<Block256> sid_;
  std::optional<wire::Message> core_request_;
  SessionResult result_;
};

std::optional<wire::Message> Driver::radio(Direction dir, const wire::Message& msg) {
  TranscriptEntry e;
  e.step = world_.tick();
  e.channel = ChannelKind::kRadio;
  e.direction = dir;
  e.bytes = wire::encode(msg);

  std::optional<Bytes> delivered = e.bytes;
  if (attacker_) {
    delivered = attacker_->intercept(
        TapEvent{e.step, session_, dir, wire::peek_type(e.bytes), e.bytes});
  }
  if (!delivered) {
    e.delivered = false;
    e.annotations.emplace_back("dropped");
    result_.transcript.append(std::move(e));
    return std::nullopt;
  }
  if (*delivered != e.bytes) {
    e.delivered_bytes = *delivered;
    e.annotations.emplace_back("replaced");
  }
  auto& entry = result_.transcript.append(std::move(e));
  try {
    return wire::decode(*delivered);
  } catch (const ParseError& err) {
    entry.annotations.emplace_back(std::string("rejected: ") + err.what());
    return std::nullopt;
  }
}

void Driver::core(Direction dir, const wire::Message& msg, bool deliver) {
  TranscriptEntry e;
  e.step = world_.tick();
  e.channel = ChannelKind::kCore;
  e.direction = dir;
  e.bytes = wire::encode(msg);
  e.delivered = deliver;
  if (sid_) e.annotations.push_back("session=" + to_hex(*sid_));
  if (!deliver) e.annotations.emplace_back("lost");
  result_.transcript.append(std::move(e));
}

bool Driver::identify() {
  auto& out = result_.outcome;
  bool need_suci = true;

  if (opt_.mode == SessionMode::kGuti) {
    if (auto gid = ue_.guti_identification()) {
      need_suci = false;
      auto at_sn = radio(Direction::kUeToSn, *gid);
      const auto* g = at_sn ? std::get_if<wire::GutiIdMsg>(&*at_sn) : nullptr;
      if (!g) {
        abort("sn-receive-guti");
        return false;
      }
      auto resolved = sn_.resolve_guti(*g, world_.rng());
      if (auto* fwd = std::get_if<ForwardedGuti>(&resolved)) {
        out.path = IdentificationPath::kGuti;
        sid_ = fwd->session_id;
        core_request_ = fwd->message;
      } else {
        need_suci = true;
      }
    }
  }

  if (need_suci) {
    out.path = IdentificationPath::kSupi;
    auto at_ue = radio(Direction::kSnToUe, wire::IdRequestMsg{});
    if (!at_ue || !std::holds_alternative<wire::IdRequestMsg>(*at_ue)) {
      abort("ue-receive-id-request");
      return false;
    }
    auto at_sn = radio(Direction::kUeToSn, ue_.identification_response(world_.rng()));
    const auto* resp = at_sn ? std::get_if<wire::IdResponseMsg>(&*at_sn) : nullptr;
    if (!resp) {
      abort("sn-receive-id-response");
      return false;
    }
    auto fwd = sn_.forward_identification(*resp, world_.rng());
    sid_ = fwd.session_id;
    core_request_ = fwd.message;
  }
  return true;
}

void Driver::authenticate() {
  auto& out = result_.outcome;
  out.session_id = *sid_;

  core(Direction::kSnToHn, *core_request_);
  Block256 hn_sid{};
  const wire::Message reply = world_.hn().handle_request(*core_request_, sn_.id(), world_.rng(),
                                                         hn_sid);
  core(Direction::kHnToSn, reply);
  const auto* vector = std::get_if<wire::HnToSnAuthMsg>(&reply);
  if (!vector) {
    abort(out.path == IdentificationPath::kSupi ? "hn-identify" : "hn-vector");
    return;
  }
  if (const auto it = world_.hn().state().pending.find(hn_sid);
      it != world_.hn().state().pending.end()) {
    out.hn_k_seaf = it->second.k_seaf;
  }

  auto challenge = sn_.forward_challenge(*sid_, *vector);
  if (!challenge) {
    abort("sn-forward-challenge");
    return;
  }
  auto at_ue = radio(Direction::kSnToUe, *challenge);
  const auto* ch = at_ue ? std::get_if<wire::ChallengeMsg>(&*at_ue) : nullptr;
  std::optional<wire::ResponseMsg> response;
  if (ch) response = ue_.process_challenge(*ch);
  if (!response) {
    out.ue_abort = ch ? ue_.last_abort() : UeAbort::kNoSession;
    abort("ue-challenge");
    return;
  }
  if (ue_.state().session_keys) out.ue_k_seaf = ue_.state().session_keys->k_seaf;

  auto at_sn = radio(Direction::kUeToSn, *response);
  const auto* res = at_sn ? std::get_if<wire::ResponseMsg>(&*at_sn) : nullptr;
  std::optional<SnVerification> verified;
  if (res) verified = sn_.verify_response(*sid_, *res);
  if (!verified) {
    abort("sn-verify-response");
    return;
  }
  out.completed = true;
  out.sn_k_seaf = verified->k_seaf;
  out.sn_supi = verified->supi;

  core(Direction::kSnToHn, verified->confirm, !opt_.lose_hn_confirmation);
  if (!opt_.lose_hn_confirmation) out.hn_confirmed = world_.hn().finalize(verified->confirm, hn_sid);
  if (!out.hn_confirmed) return;

  auto assignment = sn_.issue_assignment(*sid_, world_.rng());
  if (!assignment) return;
  auto at_ue2 = radio(Direction::kSnToUe, assignment->secured);
  if (const auto* sec = at_ue2 ? std::get_if<wire::SecuredMsg>(&*at_ue2) : nullptr) {
    out.assignment_applied = ue_.handle_secured(*sec);
  }
}

SessionResult Driver::run() {
  session_ = world_.next_session();
  ue_.attach(opt_.ue_camped_on ? *opt_.ue_camped_on : sn_.id());
  if (identify()) authenticate();
  return std::move(result_);
}

}  // namespace

SessionResult run_session(World& world, std::size_t ue_index, std::size_t sn_index,
                          SessionOptions options, Attacker* attacker) {
  if (ue_index >= world.ue_count()) throw UsageError("no such UE");
  if (sn_index >= world.sn_count()) throw UsageError("no such SN");
  const auto& ue = world.ue(ue_index);
  if (!world.hn().find_subscriber(ue.state().supi)) {
    throw UsageError("UE " + ue.state().supi + " is not registered at the HN");
  }
  return Driver(world, ue_index, sn_index, options, attacker).run();
}

}  // namespace pqaka::sim
