#include "pqaka/attacks.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include <nlohmann/json.hpp>

#include "pqaka/closure.hpp"
#include "pqaka/errors.hpp"

namespace pqaka::attacks {

using sim::Attacker;
using sim::ChannelKind;
using sim::Direction;
using sim::SessionMode;
using sim::SessionResult;
using sim::TapEvent;
using sim::TapResult;
using sim::World;
using wire::MessageType;

Evidence cite(const sim::TranscriptEntry& entry, std::string note) {
  return {entry.step, std::string(sim::to_string(entry.channel)),
          std::string(sim::to_string(entry.direction)), std::move(note)};
}

std::string Verdict::to_json() const {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : evidence) {
    ev.push_back({{"step", e.step}, {"channel", e.channel}, {"direction", e.direction},
                  {"note", e.note}});
  }
  return nlohmann::json{{"scenario", scenario},
                        {"check", check},
                        {"holds", holds},
                        {"control", control},
                        {"expected_holds", expected_holds},
                        {"as_expected", as_expected()},
                        {"detail", detail},
                        {"evidence", ev}}
      .dump();
}

bool ScenarioReport::holds() const noexcept {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Verdict& v) { return v.holds; });
}

bool ScenarioReport::controls_discriminate() const noexcept {
  return std::all_of(controls.begin(), controls.end(),
                     [](const Verdict& v) { return v.as_expected(); });
}

std::string ScenarioReport::to_jsonl() const {
  std::string out;
  for (const auto& v : checks) out += v.to_json() + '\n';
  for (const auto& v : controls) out += v.to_json() + '\n';
  return out;
}

namespace {

constexpr std::string_view kSupiA = "imsi-001010000000001";
constexpr std::string_view kSupiB = "imsi-001010000000002";
constexpr std::string_view kOtherSn = "5G:mnc002.mcc001.3gppnetwork.org";

Verdict make(std::string_view scenario, std::string check, bool control = false) {
  Verdict v;
  v.scenario = std::string(scenario);
  v.check = std::move(check);
  v.control = control;
  v.expected_holds = !control;
  return v;
}

const sim::TranscriptEntry* find_entry(const SessionResult& r, MessageType type,
                                       std::optional<Direction> dir = {}) {
  for (const auto& e : r.transcript.entries()) {
    if (wire::peek_type(e.bytes) == type && (!dir || e.direction == *dir)) return &e;
  }
  return nullptr;
}

void cite_if(Verdict& v, const SessionResult& r, MessageType type, std::string note,
             std::optional<Direction> dir = {}) {
  if (const auto* e = find_entry(r, type, dir)) v.evidence.push_back(cite(*e, std::move(note)));
}

std::string describe(const sim::SessionOutcome& o) {
  if (o.completed) return "completed";
  std::string s = "aborted at " + o.aborted_at;
  switch (o.ue_abort) {
    case UeAbort::kMacMismatch: s += " (UE: MAC mismatch)"; break;
    case UeAbort::kDecapsFailure: s += " (UE: decapsulation failure)"; break;
    case UeAbort::kPathMismatch: s += " (UE: path mismatch)"; break;
    case UeAbort::kNoSession: s += " (UE: no session)"; break;
    case UeAbort::kNone: break;
  }
  return s;
}

bool ue_silent_abort(const sim::SessionOutcome& o) {
  return !o.completed && o.aborted_at == "ue-challenge" && !o.ue_k_seaf;
}

World make_world(const ScenarioConfig& cfg, std::uint64_t salt, std::size_t subscribers = 1,
                 HnHooks hn_hooks = {}) {
  World w(cfg.suite, cfg.seed * 7919 + salt, hn_hooks);
  w.add_serving_network();
  w.add_subscriber(std::string(kSupiA), std::nullopt, cfg.ue_hooks);
  if (subscribers > 1) w.add_subscriber(std::string(kSupiB), std::nullopt, cfg.ue_hooks);
  return w;
}

struct UeSnapshot {
  std::optional<SharedKey256> k_s;
  std::optional<Guti> guti;
  std::optional<Block256> r_sn_prime;
  bool operator==(const UeSnapshot&) const = default;
};

UeSnapshot snapshot(const UserEquipment& ue) {
  return {ue.state().k_s, ue.state().guti, ue.state().r_sn_prime};
}

SessionResult run_with_tap(World& w, std::size_t ue, sim::RadioTap tap,
                           sim::SessionOptions opt = {}) {
  Attacker a;
  a.tap(ChannelKind::kRadio, std::move(tap));
  return sim::run_session(w, ue, 0, opt, &a);
}

sim::RadioTap challenge_rewriter(std::function<wire::ChallengeMsg(wire::ChallengeMsg)> fn) {
  return Attacker::tamper_type(MessageType::kChallenge, [fn](ByteView b) {
    return wire::encode(fn(wire::decode_as<wire::ChallengeMsg>(b)));
  });
}

// -- replay -----------------------------------------------------------------

Verdict replay_variant(World& w, const std::string& name, const wire::ChallengeMsg& recorded,
                       bool reuse_c2, bool reuse_autn) {
  auto v = make("replay", name);
  const UeSnapshot before = snapshot(w.ue(0));
  auto r = run_with_tap(w, 0, challenge_rewriter([&](wire::ChallengeMsg fresh) {
                          if (reuse_c2) fresh.c2 = recorded.c2;
                          if (reuse_autn) fresh.autn = recorded.autn;
                          return fresh;
                        }));
  const bool state_kept = snapshot(w.ue(0)) == before;
  v.holds = ue_silent_abort(r.outcome) && state_kept;
  v.detail = describe(r.outcome) + (state_kept ? "; UE ratchet state unchanged"
                                               : "; UE ratchet state changed");
  cite_if(v, r, MessageType::kChallenge, "challenge rewritten by attacker");
  if (const auto* resp = find_entry(r, MessageType::kResponse)) {
    v.evidence.push_back(cite(*resp, "UE answered the rewritten challenge"));
  }
  return v;
}

}  // namespace

ScenarioReport scenario_replay_challenge(const ScenarioConfig& cfg) {
  ScenarioReport rep{"replay", {}, {}};
  World w = make_world(cfg, 1);

  auto a = sim::run_session(w, 0, 0);
  const auto* a_ch = find_entry(a, MessageType::kChallenge);
  if (!a.outcome.completed || !a_ch) {
    auto v = make("replay", "honest session A");
    v.detail = "session A did not complete: " + describe(a.outcome);
    rep.checks.push_back(v);
    return rep;
  }
  const auto recorded = wire::decode_as<wire::ChallengeMsg>(a_ch->bytes);

  rep.checks.push_back(replay_variant(w, "replayed (c2, AUTN) from session A", recorded, true, true));
  rep.checks.push_back(replay_variant(w, "replayed c2 with fresh AUTN", recorded, true, false));
  rep.checks.push_back(replay_variant(w, "fresh c2 with replayed AUTN", recorded, false, true));

  {
    auto v = make("replay", "replayed SUCI from session A");
    const auto* a_id = find_entry(a, MessageType::kIdResponse);
    const UeSnapshot before = snapshot(w.ue(0));
    auto r = run_with_tap(w, 0, Attacker::replace_type(MessageType::kIdResponse, a_id->bytes));
    const auto* vec = find_entry(r, MessageType::kHnToSnAuth);
    const bool kept = snapshot(w.ue(0)) == before;
    v.holds = vec && ue_silent_abort(r.outcome) && kept;
    v.detail = std::string(vec ? "HN accepted the replayed identification; " : "HN rejected; ") +
               describe(r.outcome) + (kept ? "; UE ratchet state unchanged" : "; UE state changed");
    cite_if(v, r, MessageType::kIdResponse, "identity response replaced with session A's");
    if (vec) v.evidence.push_back(cite(*vec, "HN issued a vector for session A's pk_U"));
    cite_if(v, r, MessageType::kChallenge, "challenge the UE cannot verify");
    rep.checks.push_back(std::move(v));
  }

  {
    auto v = make("replay", "identity replay of B's own challenge", true);
    auto r = run_with_tap(w, 0, challenge_rewriter([](wire::ChallengeMsg c) { return c; }));
    v.holds = ue_silent_abort(r.outcome);
    v.detail = describe(r.outcome);
    cite_if(v, r, MessageType::kChallenge, "challenge re-sent unchanged");
    rep.controls.push_back(std::move(v));
  }
  {
    auto v = make("replay", "UE without MAC check accepts replayed challenge", true);
    ScenarioConfig weak = cfg;
    weak.ue_hooks.skip_mac_check = true;
    World w2 = make_world(weak, 2);
    auto a2 = sim::run_session(w2, 0, 0);
    const auto rec2 = wire::decode_as<wire::ChallengeMsg>(
        find_entry(a2, MessageType::kChallenge)->bytes);
    const auto inner = replay_variant(w2, v.check, rec2, false, true);
    v.holds = inner.holds;
    v.detail = inner.detail;
    v.evidence = inner.evidence;
    rep.controls.push_back(std::move(v));
  }
  return rep;
}

// -- linkability ------------------------------------------------------------

namespace {

using FieldSet = std::set<std::string>;

void add_fields(FieldSet& out, const wire::Message& msg) {
  auto hex = [&](ByteView b) { out.insert(to_hex(b)); };
  out.insert("tag:" + std::string(wire::type_name(wire::type_of(msg))));
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, wire::IdResponseMsg>) {
          hex(m.c1);
          hex(m.suci_conc);
          hex(m.mac_u);
          out.insert("str:" + m.id_hn);
        } else if constexpr (std::is_same_v<T, wire::ChallengeMsg>) {
          hex(m.autn.conc);
          hex(m.autn.mac);
          if (m.c2) hex(*m.c2);
        } else if constexpr (std::is_same_v<T, wire::ResponseMsg>) {
          hex(m.res_star);
        } else if constexpr (std::is_same_v<T, wire::GutiIdMsg>) {
          hex(m.guti);
        } else if constexpr (std::is_same_v<T, wire::SecuredMsg>) {
          hex(m.sealed);
        }
      },
      msg);
}

FieldSet radio_fields(const SessionResult& r) {
  FieldSet out;
  for (const auto& e : r.transcript.entries()) {
    if (e.channel != ChannelKind::kRadio) continue;
    try {
      add_fields(out, wire::decode(e.bytes));
    } catch (const ParseError&) {
    }
  }
  return out;
}

FieldSet intersect(const FieldSet& a, const FieldSet& b) {
  FieldSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string join(const FieldSet& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ", ") + (x.size() > 24 ? x.substr(0, 24) + ".." : x);
  return "{" + out + "}";
}

Verdict linkability_probe(const ScenarioConfig& cfg, SessionMode mode, std::string check,
                          UeHooks ue1_hooks, bool control) {
  auto v = make("linkability", std::move(check), control);
  World w(cfg.suite, cfg.seed * 7919 + (mode == SessionMode::kSupi ? 11 : 12));
  w.add_serving_network();
  w.add_subscriber(std::string(kSupiA), std::nullopt, ue1_hooks);
  w.add_subscriber(std::string(kSupiB), std::nullopt, cfg.ue_hooks);

  if (mode == SessionMode::kGuti) {
    sim::run_session(w, 0, 0);
    sim::run_session(w, 1, 0);
  }
  const auto opt = sim::in_mode(mode);
  auto s11 = sim::run_session(w, 0, 0, opt);
  auto s12 = sim::run_session(w, 0, 0, opt);
  auto s21 = sim::run_session(w, 1, 0, opt);

  const bool all_done = s11.outcome.completed && s12.outcome.completed && s21.outcome.completed;
  const auto same = intersect(radio_fields(s11), radio_fields(s12));
  const auto other = intersect(radio_fields(s11), radio_fields(s21));
  v.holds = all_done && same == other;
  v.detail = "I(UE1,UE1)=" + join(same) + " I(UE1,UE2)=" + join(other) +
             (all_done ? "" : " (a session did not complete)");
  const auto first = mode == SessionMode::kSupi ? MessageType::kIdResponse : MessageType::kGutiId;
  cite_if(v, s11, first, "UE1 session 1 identification");
  cite_if(v, s12, first, "UE1 session 2 identification");
  cite_if(v, s21, first, "UE2 session identification");
  return v;
}

}  // namespace

ScenarioReport scenario_linkability_probe(const ScenarioConfig& cfg) {
  ScenarioReport rep{"linkability", {}, {}};
  rep.checks.push_back(
      linkability_probe(cfg, SessionMode::kSupi, "SUPI sessions", cfg.ue_hooks, false));
  rep.checks.push_back(
      linkability_probe(cfg, SessionMode::kGuti, "GUTI sessions", cfg.ue_hooks, false));
  UeHooks broken = cfg.ue_hooks;
  broken.reuse_ephemeral = true;
  rep.controls.push_back(linkability_probe(cfg, SessionMode::kSupi,
                                           "UE reusing (pk_U, c1)", broken, true));
  return rep;
}

// -- compromised SN ---------------------------------------------------------

namespace {

/// What a malicious SN has seen up to (excluding) the entry at `stop`.
Knowledge sn_view(const World& w, const SessionResult& r, std::size_t stop_step) {
  Knowledge k;
  for (const auto& e : r.transcript.entries()) {
    if (e.step >= stop_step) break;
    try {
      learn_message(k, wire::decode(e.received()));
    } catch (const ParseError&) {
    }
  }
  for (std::size_t i = 0; i < w.sn_count(); ++i) k.add(Kind::kIdSn, as_bytes(w.sn(i).id()));
  k.add(Kind::kIdHn, as_bytes(w.hn().state().id_hn));
  k.add(Kind::kKemPublicKey, w.hn().public_key());
  return k;
}

}  // namespace

ScenarioReport scenario_compromised_sn_binding(const ScenarioConfig& cfg) {
  ScenarioReport rep{"sn-binding", {}, {}};

  {
    auto v = make("sn-binding", "pre-response closure of SN state excludes K_seaf and SUPI");
    auto ctl = make("sn-binding", "SN recovers (SUPI, K_seaf) once RES* is known", true);
    World w = make_world(cfg, 21);
    std::optional<SnState> at_response;
    auto r = run_with_tap(w, 0, [&](const TapEvent& e) {
      if (e.type == MessageType::kResponse) at_response = w.sn(0).state();
      return TapResult::pass();
    });
    const auto* resp = find_entry(r, MessageType::kResponse);
    if (!r.outcome.completed || !resp || !at_response) {
      v.detail = "honest session did not complete: " + describe(r.outcome);
      rep.checks.push_back(v);
      return rep;
    }
    const auto supi = as_bytes(kSupiA);
    const auto k_seaf = *r.outcome.sn_k_seaf;

    bool state_clean = at_response->completed.empty();
    for (const auto& [sid, p] : at_response->pending) state_clean &= !p.resolved_supi.has_value();

    Knowledge pre = sn_view(w, r, resp->step);
    const auto stats = close(pre, w.suite(), cfg.closure_depth);
    const bool leaked = pre.contains_value(k_seaf) || pre.contains_value(supi);
    v.holds = state_clean && !leaked;
    v.detail = "closure: " + std::to_string(pre.size()) + " facts after " +
               std::to_string(stats.rounds) + " rounds, " + std::to_string(stats.aead_attempts) +
               " AEAD key trials, " + std::to_string(stats.aead_successes) + " openings; " +
               (state_clean ? "SN state holds no SUPI before RES*" : "SN state holds a SUPI");
    cite_if(v, r, MessageType::kHnToSnAuth, "M held by the SN");
    cite_if(v, r, MessageType::kChallenge, "challenge sent before RES*");
    rep.checks.push_back(std::move(v));

    Knowledge post = sn_view(w, r, resp->step + 1);
    close(post, w.suite(), cfg.closure_depth);
    ctl.holds = !(post.contains_value(k_seaf) && post.contains_value(supi));
    ctl.detail = std::string("with RES*: K_seaf ") + (post.contains_value(k_seaf) ? "" : "not ") +
                 "derivable, SUPI " + (post.contains_value(supi) ? "" : "not ") + "derivable";
    ctl.evidence.push_back(cite(*resp, "RES* received"));
    rep.controls.push_back(std::move(ctl));
  }

  {
    auto v = make("sn-binding", "parallel session cannot bind another subscriber's vector");
    World w = make_world(cfg, 22, 2);
    std::optional<Bytes> a_challenge;
    auto a = run_with_tap(w, 0, [&](const TapEvent& e) {
      if (e.type != MessageType::kChallenge) return TapResult::pass();
      a_challenge = Bytes(e.bytes.begin(), e.bytes.end());
      return TapResult::drop();
    });
    auto b = run_with_tap(w, 1, Attacker::replace_type(MessageType::kChallenge, *a_challenge));
    const bool rejected = b.outcome.ue_abort == UeAbort::kMacMismatch ||
                          b.outcome.ue_abort == UeAbort::kDecapsFailure;
    v.holds = ue_silent_abort(b.outcome) && rejected && !a.outcome.completed;
    v.detail = "session B with A's vector: " + describe(b.outcome);
    cite_if(v, a, MessageType::kChallenge, "A's challenge withheld by the SN");
    cite_if(v, b, MessageType::kChallenge, "A's challenge delivered to B");
    rep.checks.push_back(std::move(v));
  }

  {
    auto v = make("sn-binding", "relayed identification for another SN identity never completes");
    bool ok = true;
    std::string detail;
    for (const bool skip : {false, true}) {
      World w(cfg.suite, cfg.seed * 7919 + 23, HnHooks{skip});
      w.add_serving_network();
      const auto rogue = w.add_serving_network(std::string(kOtherSn));
      w.add_subscriber(std::string(kSupiA), std::nullopt, cfg.ue_hooks);
      sim::SessionOptions opt;
      opt.ue_camped_on = std::string(sim::kDefaultIdSn);
      auto r = sim::run_session(w, 0, rogue, opt);
      ok &= !r.outcome.completed && !r.outcome.sn_k_seaf && !r.outcome.sn_supi;
      if (!detail.empty()) detail += "; ";
      detail += std::string(skip ? "HN check skipped: " : "HN check on: ") + describe(r.outcome);
      cite_if(v, r, MessageType::kHnToSnAuth, "vector issued for the rogue SN identity");
      cite_if(v, r, MessageType::kHnAbort, "HN refused the mismatched ID_SN");
      cite_if(v, r, MessageType::kResponse, "RES* bound to the UE's ID_SN");
    }
    v.holds = ok;
    v.detail = detail;
    rep.checks.push_back(std::move(v));
  }
  return rep;
}

// -- forward secrecy --------------------------------------------------------

namespace {

void learn_public(Knowledge& k, const World& w) {
  for (std::size_t i = 0; i < w.sn_count(); ++i) k.add(Kind::kIdSn, as_bytes(w.sn(i).id()));
  k.add(Kind::kIdHn, as_bytes(w.hn().state().id_hn));
  k.add(Kind::kKemPublicKey, w.hn().public_key());
}

void learn_compromise(Knowledge& k, const sim::CompromiseRecord& rec) {
  for (const auto& [label, value] : rec.secrets) {
    if (label == "sk_H") {
      k.add(Kind::kKemSecretKey, value);
    } else if (label.rfind("K_S:", 0) == 0) {
      k.add(Kind::kRatchetKey, value);
    } else if (label.rfind("K_seaf:", 0) == 0) {
      k.add(Kind::kKseaf, value);
    } else if (label.rfind("K:", 0) == 0) {
      k.add(Kind::kLongTermKey, value);
    }
  }
}

std::string reach(const Knowledge& k, ByteView v) {
  auto d = k.depth_of(v);
  return d ? "derived at depth " + std::to_string(*d) : "not derived";
}

struct Captured {
  std::optional<crypto::KemKeyPair> ephemeral;
  std::optional<Bytes> c2;
};

sim::RadioTap capture_ephemeral(World& w, Captured& out) {
  return [&w, &out](const TapEvent& e) {
    if (e.type == MessageType::kChallenge) {
      out.ephemeral = w.ue(0).state().ephemeral;
      out.c2 = wire::decode_as<wire::ChallengeMsg>(e.bytes).c2;
    }
    return TapResult::pass();
  };
}

}  // namespace

ScenarioReport scenario_forward_secrecy_game(const ScenarioConfig& cfg) {
  ScenarioReport rep{"forward-secrecy", {}, {}};
  const std::size_t depth = cfg.closure_depth;

  // SUPI session, then K and sk_H leak.
  {
    auto v = make("forward-secrecy", "SUPI session after K and sk_H compromise");
    auto ctl = make("forward-secrecy", "SUPI session with sk_U also leaked", true);
    World w = make_world(cfg, 31);
    Captured cap;
    auto r = run_with_tap(w, 0, capture_ephemeral(w, cap));
    if (!r.outcome.completed || !cap.ephemeral || !cap.c2) {
      v.detail = "honest session did not complete: " + describe(r.outcome);
      rep.checks.push_back(v);
      return rep;
    }
    const auto k_s2 = *w.suite().decaps(cap.ephemeral->sk, *cap.c2);
    const auto k_seaf = *r.outcome.ue_k_seaf;

    Attacker adv;
    const auto ck = adv.compromise(sim::CompromiseTarget::kUeLongTermKey, w);
    const auto ch = adv.compromise(sim::CompromiseTarget::kHnSecretKey, w);
    Knowledge k;
    learn_public(k, w);
    learn_radio(k, r.transcript);
    learn_compromise(k, ck);
    learn_compromise(k, ch);
    Knowledge k_ctl = k;

    close(k, w.suite(), depth);
    v.holds = !k.contains_value(k_seaf) && !k.contains_value(k_s2);
    v.detail = "K_seaf " + reach(k, k_seaf) + ", K_s2 " + reach(k, k_s2) + "; compromise at step " +
               std::to_string(ck.at_step) + " after the session";
    cite_if(v, r, MessageType::kIdResponse, "c1 opened with sk_H (SUPI, pk_U learnt)");
    cite_if(v, r, MessageType::kChallenge, "c2 needs the wiped sk_U");
    rep.checks.push_back(std::move(v));

    k_ctl.add(Kind::kKemSecretKey, cap.ephemeral->sk);
    close(k_ctl, w.suite(), depth);
    ctl.holds = !k_ctl.contains_value(k_seaf) && !k_ctl.contains_value(k_s2);
    ctl.detail = "K_seaf " + reach(k_ctl, k_seaf) + ", K_s2 " + reach(k_ctl, k_s2);
    cite_if(ctl, r, MessageType::kChallenge, "c2 decapsulated with the leaked sk_U");
    rep.controls.push_back(std::move(ctl));
  }

  // SUPI session, then a GUTI session; K, sk_H and the ratcheted registry leak.
  {
    auto v = make("forward-secrecy", "GUTI session after K, sk_H and registry compromise");
    auto ctl = make("forward-secrecy", "GUTI session with pre-ratchet K_S leaked", true);
    auto back = make("forward-secrecy", "K_seaf of session i does not reveal session i+1");
    World w = make_world(cfg, 32);
    auto s1 = sim::run_session(w, 0, 0);
    const auto k_s_before = w.ue(0).state().k_s;
    const auto r_sn_prime = w.ue(0).state().r_sn_prime;
    auto s2 = sim::run_session(w, 0, 0, sim::in_mode(SessionMode::kGuti));
    if (!s1.outcome.completed || !s2.outcome.completed || !k_s_before || !r_sn_prime ||
        s2.outcome.path != IdentificationPath::kGuti) {
      v.detail = "GUTI chain did not complete: " + describe(s1.outcome) + " / " +
                 describe(s2.outcome);
      rep.checks.push_back(v);
      return rep;
    }
    const auto k_star = *k_s_before ^ *r_sn_prime;
    const auto k_seaf1 = *s1.outcome.ue_k_seaf;
    const auto k_seaf2 = *s2.outcome.ue_k_seaf;

    Attacker adv;
    Knowledge k;
    learn_public(k, w);
    learn_radio(k, s1.transcript);
    learn_radio(k, s2.transcript);
    learn_compromise(k, adv.compromise(sim::CompromiseTarget::kUeLongTermKey, w));
    learn_compromise(k, adv.compromise(sim::CompromiseTarget::kHnSecretKey, w));
    learn_compromise(k, adv.compromise(sim::CompromiseTarget::kHnRegistry, w));
    // R_SN' values are shared with the SN; treat every one it held as public.
    k.add(Kind::kRsnPrime, *r_sn_prime);
    for (const auto& [guti, entry] : w.sn(0).state().guti_table) {
      k.add(Kind::kRsnPrime, entry.r_sn_prime);
    }
    Knowledge k_ctl = k;

    close(k, w.suite(), depth);
    v.holds = !k.contains_value(k_seaf2) && !k.contains_value(k_star) &&
              !k.contains_value(k_seaf1);
    v.detail = "GUTI K_seaf " + reach(k, k_seaf2) + ", K_S' " + reach(k, k_star) +
               ", earlier SUPI K_seaf " + reach(k, k_seaf1);
    cite_if(v, s2, MessageType::kGutiId, "GUTI presented");
    cite_if(v, s2, MessageType::kChallenge, "challenge without c2");
    rep.checks.push_back(std::move(v));

    k_ctl.add(Kind::kRatchetKey, *k_s_before);
    close(k_ctl, w.suite(), depth);
    ctl.holds = !k_ctl.contains_value(k_seaf2) && !k_ctl.contains_value(k_star);
    ctl.detail = "GUTI K_seaf " + reach(k_ctl, k_seaf2) + ", K_S' " + reach(k_ctl, k_star);
    cite_if(ctl, s2, MessageType::kChallenge, "challenge keyed by the leaked K_S");
    rep.controls.push_back(std::move(ctl));

    Knowledge kb;
    learn_public(kb, w);
    learn_radio(kb, s1.transcript);
    learn_radio(kb, s2.transcript);
    kb.add(Kind::kKseaf, k_seaf1);
    close(kb, w.suite(), depth);
    back.holds = !kb.contains_value(k_seaf2);
    back.detail = "session i+1 K_seaf " + reach(kb, k_seaf2);
    cite_if(back, s1, MessageType::kSecured, "assignment opened with session i's K_seaf");
    cite_if(back, s2, MessageType::kChallenge, "session i+1 challenge");
    rep.checks.push_back(std::move(back));
  }
  return rep;
}

// -- registry ---------------------------------------------------------------

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"replay", "linkability", "sn-binding",
                                              "forward-secrecy"};
  return names;
}

ScenarioReport run_scenario(std::string_view name, const ScenarioConfig& cfg) {
  if (!cfg.suite) throw UsageError("scenario requires a KEM suite");
  if (name == "replay") return scenario_replay_challenge(cfg);
  if (name == "linkability") return scenario_linkability_probe(cfg);
  if (name == "sn-binding") return scenario_compromised_sn_binding(cfg);
  if (name == "forward-secrecy") return scenario_forward_secrecy_game(cfg);
  throw UsageError("unknown scenario '" + std::string(name) +
                   "' (expected replay, linkability, sn-binding, forward-secrecy or all)");
}

// -- fuzz -------------------------------------------------------------------

FuzzReport challenge_bitflip_fuzz(const ScenarioConfig& cfg) {
  FuzzReport rep;
  World w = make_world(cfg, 41);
  std::optional<UserEquipment> ue_at_challenge;
  std::optional<wire::ChallengeMsg> honest;
  auto r = run_with_tap(w, 0, [&](const TapEvent& e) {
    if (e.type == MessageType::kChallenge) {
      ue_at_challenge.emplace(w.ue(0));
      honest = wire::decode_as<wire::ChallengeMsg>(e.bytes);
    }
    return TapResult::pass();
  });
  if (!r.outcome.completed || !honest) {
    rep.failures.push_back("honest baseline did not complete: " + describe(r.outcome));
    return rep;
  }

  auto attempt = [&](const wire::ChallengeMsg& flipped, const std::string& what) {
    UserEquipment ue = *ue_at_challenge;
    ++rep.total;
    if (!ue.process_challenge(flipped)) {
      ++rep.silent_aborts;
    } else {
      rep.failures.push_back(what);
    }
  };
  for (std::size_t bit = 0; bit < 512; ++bit) {
    auto c = *honest;
    auto& field = bit < 256 ? c.autn.conc.data : c.autn.mac.data;
    const std::size_t b = bit % 256;
    field[b / 8] ^= static_cast<std::uint8_t>(1u << (b % 8));
    attempt(c, "AUTN bit " + std::to_string(bit));
  }
  if (honest->c2) {
    for (std::size_t bit = 0; bit < honest->c2->size() * 8; ++bit) {
      auto c = *honest;
      (*c.c2)[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      attempt(c, "c2 bit " + std::to_string(bit));
    }
  }
  return rep;
}

}  // namespace pqaka::attacks
