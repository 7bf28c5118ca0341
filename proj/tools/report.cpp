#include "report.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "tsaudit/components.hpp"
#include "tsaudit/consistency.hpp"
#include "tsaudit/errors.hpp"
#include "tsaudit/pumps.hpp"
#include "tsaudit/single_player.hpp"
#include "tsaudit/tsjson.hpp"

namespace tsaudit::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int k = 0; k < len; ++k) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
  }
  return hex.str();
}

namespace {

using Clock = std::chrono::steady_clock;

// Formatting shared by the JSON and text forms.
class Emitter {
 public:
  Emitter(const TypeSpace& ts, const OutputOptions& out) : ts_(ts), out_(out) {}

  Json vec(const RationalVector& v) const {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  }

  /// Puts v under key, plus key_approx with doubles when --decimal is set.
  void put(Json& obj, const std::string& key, const RationalVector& v) const {
    obj[key] = vec(v);
    if (out_.decimal) {
      Json a = Json::array();
      for (const auto& x : v) a.push_back(x.to_double());
      obj[key + "_approx"] = a;
    }
  }

  void put(Json& obj, const std::string& key, const Rational& r) const {
    obj[key] = r.str();
    if (out_.decimal) obj[key + "_approx"] = r.to_double();
  }

  Json labels(EventSet e) const { return Json(ts_.labels_of(e)); }

  Json names(PlayerSet players) const {
    Json a = Json::array();
    for (auto i : players.indices()) a.push_back(ts_.player_name(i));
    return a;
  }

  std::string text(const RationalVector& v) const {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
    s += ")";
    if (out_.decimal) {
      std::ostringstream approx;
      approx << " ~ (";
      for (std::size_t k = 0; k < v.size(); ++k) approx << (k ? ", " : "") << v[k].to_double();
      approx << ")";
      s += approx.str();
    }
    return s;
  }

  std::string text(const Rational& r) const {
    if (!out_.decimal) return r.str();
    std::ostringstream s;
    s << r.str() << " ~ " << r.to_double();
    return s.str();
  }

  std::string text(EventSet e) const {
    std::string s = "{";
    const auto l = ts_.labels_of(e);
    for (std::size_t k = 0; k < l.size(); ++k) s += (k ? ", " : "") + l[k];
    return s + "}";
  }

  std::string text_names(PlayerSet players) const {
    std::string s;
    for (auto i : players.indices()) s += (s.empty() ? "" : ", ") + ts_.player_name(i);
    return "{" + s + "}";
  }

  Json family(const PayoffFamily& f) const {
    Json j;
    j["players"] = names(f.player_set());
    Json payoffs = Json::object();
    for (std::size_t k = 0; k < f.players.size(); ++k) payoffs[ts_.player_name(f.players[k])] = vec(f.payoffs[k]);
    j["payoffs"] = payoffs;
    return j;
  }

  void family_text(std::ostream& os, const PayoffFamily& f, const std::vector<RationalVector>& exp) const {
    for (std::size_t k = 0; k < f.players.size(); ++k) {
      os << "    " << ts_.player_name(f.players[k]) << ": payoff " << text(f.payoffs[k]) << "\n";
      if (k < exp.size()) os << "      expectations " << text(exp[k]) << "\n";
    }
  }

  const TypeSpace& space() const { return ts_; }

 private:
  const TypeSpace& ts_;
  const OutputOptions& out_;
};

Json violations_json(const std::vector<Violation>& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    a.push_back({{"axiom", axiom_name(x.axiom)}, {"player", x.player}, {"state", x.state}, {"message", x.message}});
  }
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Verified bet certificate; throws InternalError when re-verification fails.
Json bet_certificate(const Emitter& em, const Bet& bet, BetKind at_least, std::ostream& text) {
  const auto v = verify_bet(em.space(), bet);
  const bool ok = at_least == BetKind::Agreeable         ? v.agreeable
                  : at_least == BetKind::WeaklyAgreeable ? v.weakly_agreeable
                                                         : v.acceptable;
  if (!ok) throw InternalError(std::string("emitted bet does not verify as ") + bet_kind_name(at_least));
  Json j = em.family(bet);
  j["kind"] = bet_kind_name(v.kind);
  em.put(j, "margin", v.margin);
  if (v.certifying_component) j["certifying_component"] = em.labels(*v.certifying_component);
  j["verified"] = true;
  text << "  " << bet_kind_name(v.kind) << " bet, margin " << em.text(v.margin) << " (verified)\n";
  em.family_text(text, bet, v.expectations);
  return j;
}

Json prior_certificate(const Emitter& em, const ProbVector& p, PlayerSet players) {
  if (!is_common_prior(em.space(), p, players)) throw InternalError("emitted prior is not a common prior");
  Json j;
  em.put(j, "witness", p.values());
  j["verified"] = true;
  return j;
}

// Shared pipeline: read, digest, parse, validate, then the command body.
// Every library error maps onto the exit codes here.
Report run(const std::string& command, const std::string& path, const OutputOptions& out, bool needs_valid,
           const std::function<int(const Emitter&, Json&, std::ostream&)>& body) {
  Report report;
  std::ostringstream text;
  Json& j = report.json;
  j["schema"] = kSchema;
  j["command"] = command;
  j["input"] = {{"path", path}};
  const auto t0 = Clock::now();
  auto t1 = t0;
  try {
    const std::string bytes = read_file(path);
    j["input"]["sha256"] = sha256_hex(bytes);
    ParseOptions parse;
    parse.max_states = out.max_states;
    const TypeSpace ts = parse_type_space(bytes, parse);
    t1 = Clock::now();
    j["input"]["states"] = ts.num_states();
    j["input"]["players"] = ts.num_players();
    text << path << ": " << ts.num_states() << (ts.num_states() == 1 ? " state, " : " states, ")
         << ts.num_players() << (ts.num_players() == 1 ? " player\n" : " players\n");

    const auto violations = validate(ts);
    j["validation"] = {{"valid", violations.empty()}, {"violations", violations_json(violations)}};
    if (!violations.empty()) {
      text << "invalid type space:\n";
      for (const auto& v : violations) text << "  " << axiom_name(v.axiom) << ": " << v.message << "\n";
    }
    if (violations.empty() || !needs_valid) {
      const Emitter em(ts, out);
      report.exit_code = body(em, j, text);
    }
    if (!violations.empty()) report.exit_code = kFinding;
  } catch (const IoError& e) {
    j["error"] = {{"kind", "io"}, {"message", e.what()}};
    text << "error: " << e.what() << "\n";
    report.exit_code = kInput;
  } catch (const ParseError& e) {
    j["error"] = {{"kind", "parse"}, {"message", e.what()}};
    text << "error: " << path << ": " << e.what() << "\n";
    report.exit_code = kInput;
  } catch (const StructureError& e) {
    j["error"] = {{"kind", "input"}, {"message", e.what()}};
    text << "error: " << e.what() << "\n";
    report.exit_code = kInput;
  } catch (const PreconditionError& e) {
    j["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    text << "error: " << e.what() << "\n";
    report.exit_code = kFinding;
  } catch (const InternalError& e) {
    j["error"] = {{"kind", "internal"}, {"message", e.what()}};
    text << "internal error: " << e.what() << "\n";
    report.exit_code = kInternal;
  }
  if (out.timing) {
    const auto t2 = Clock::now();
    const auto ms = [](auto a, auto b) { return std::chrono::duration<double, std::milli>(b - a).count(); };
    j["timing_ms"] = {{"parse", ms(t0, t1)}, {"analysis", ms(t1, t2)}};
    text << "timing: parse " << ms(t0, t1) << " ms, analysis " << ms(t1, t2) << " ms\n";
  }
  j["exit_code"] = report.exit_code;
  report.text = text.str();
  return report;
}

ProbVector parse_prior(const std::string& text, std::size_t n) {
  RationalVector v;
  try {
    v = parse_rational_list(text);
  } catch (const ParseError& e) {
    throw StructureError(std::string("--prior: ") + e.what());
  }
  if (v.size() != n) {
    throw StructureError("--prior has " + std::to_string(v.size()) + " entries for " + std::to_string(n) +
                         " states");
  }
  auto p = ProbVector::try_make(v);
  if (!p) throw StructureError("--prior is not a probability vector (entries must be >= 0 and sum to 1)");
  return *p;
}

PlayerSet parse_players(const TypeSpace& ts, const std::string& text) {
  PlayerSet out;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    const auto i = ts.player_index(name);
    if (!i) throw StructureError("unknown player \"" + name + "\"");
    out.insert(*i);
  }
  if (out.empty()) throw StructureError("--players names no player");
  return out;
}

Json components_json(const Emitter& em, const ComponentReport& r, std::ostream& text) {
  Json j;
  j["players"] = em.names(r.players);
  Json minimal = Json::array();
  text << "minimal components for " << em.text_names(r.players) << ":\n";
  for (auto c : r.minimal) {
    minimal.push_back(em.labels(c));
    text << "  " << em.text(c) << "\n";
  }
  j["minimal"] = minimal;
  Json closures = Json::object();
  text << "closures:\n";
  for (std::size_t w = 0; w < r.closure.size(); ++w) {
    closures[em.space().state_label(w)] = em.labels(r.closure[w]);
    text << "  " << em.space().state_label(w) << ": " << em.text(r.closure[w]) << "\n";
  }
  j["closures"] = closures;
  return j;
}

}  // namespace

Report run_validate(const std::string& path, const OutputOptions& out) {
  return run("validate", path, out, true, [](const Emitter&, Json&, std::ostream& text) {
    text << "valid\n";
    return kOk;
  });
}

Report run_components(const std::string& path, const OutputOptions& out,
                      const std::optional<std::string>& players) {
  return run("components", path, out, false, [&](const Emitter& em, Json& j, std::ostream& text) {
    const PlayerSet set = players ? parse_players(em.space(), *players) : em.space().all_players();
    j["components"] = components_json(em, minimal_components(em.space(), set), text);
    return kOk;
  });
}

Report run_classify(const std::string& path, const OutputOptions& out) {
  return run("classify", path, out, true, [](const Emitter& em, Json& j, std::ostream& text) {
    const TypeSpace& ts = em.space();
    std::ostringstream comp_text;
    j["components"] = components_json(em, minimal_components(ts, ts.all_players()), comp_text);
    const auto v = classify(ts);
    j["verdict"] = {{"level", level_name(v.level)},
                    {"consistent", v.consistency.consistent},
                    {"universally_consistent", v.universal.universally_consistent},
                    {"strongly_consistent", v.strong.strongly_consistent}};
    text << "level: " << level_name(v.level) << "\n";

    Json cert = Json::object();
    if (v.consistency.witness) {
      Json c = prior_certificate(em, *v.consistency.witness, ts.all_players());
      if (v.consistency.unique) c["unique"] = *v.consistency.unique;
      cert["common_prior"] = c;
      text << "common prior " << em.text(v.consistency.witness->values())
           << (v.consistency.unique == true ? " (unique)" : v.consistency.unique == false ? " (not unique)" : "")
           << " (verified)\n";
    } else {
      cert["common_prior"] = nullptr;
      text << "no common prior; refuted by\n";
      cert["agreeable_bet"] = bet_certificate(em, v.consistency.agreeable_bet->bet, BetKind::Agreeable, text);
    }

    if (v.universal.universally_consistent) {
      Json list = Json::array();
      for (const auto& cw : v.universal.witnesses) {
        Json c = prior_certificate(em, cw.witness, cw.players);
        c["players"] = em.names(cw.players);
        c["component"] = em.labels(cw.component);
        list.push_back(c);
      }
      cert["component_priors"] = list;
      text << "every minimal component of every coalition has a common prior (" << list.size()
           << " checked)\n";
    } else if (v.consistency.consistent) {
      const auto& b = *v.universal.weakly_agreeable_bet;
      text << "component " << em.text(*b.component) << " for " << em.text_names(b.players)
           << " has no common prior; refuted by\n";
      Json c = bet_certificate(em, b.bet, BetKind::WeaklyAgreeable, text);
      c["coalition"] = em.names(b.players);
      c["component"] = em.labels(*b.component);
      cert["weakly_agreeable_bet"] = c;
    }

    if (v.strong.strongly_consistent) {
      Json c = prior_certificate(em, *v.strong.witness, ts.all_players());
      em.put(c, "min_cell_mass", v.strong.min_cell_mass);
      cert["strong_prior"] = c;
      text << "common prior positive on every cell " << em.text(v.strong.witness->values())
           << ", smallest cell mass " << em.text(v.strong.min_cell_mass) << " (verified)\n";
    } else if (v.universal.universally_consistent) {
      text << "no common prior is positive on every cell; refuted by\n";
      cert["acceptable_bet"] = bet_certificate(em, v.strong.acceptable_bet->bet, BetKind::Acceptable, text);
    }
    j["certificates"] = cert;

    const bool c = v.consistency.consistent;
    const bool u = v.universal.universally_consistent;
    const bool s = v.strong.strongly_consistent;
    j["money_pumps"] = {{"weak", !c}, {"universal", !u}, {"strong", !s}};
    text << "money pumps: weak " << yes_no(!c) << ", universal " << yes_no(!u) << ", strong " << yes_no(!s) << "\n";
    return kOk;
  });
}

Report run_bet(const std::string& path, const OutputOptions& out, const BetRequest& req) {
  return run("bet", path, out, true, [&](const Emitter& em, Json& j, std::ostream& text) {
    const TypeSpace& ts = em.space();
    if (req.verify_path) {
      Json bet_json;
      try {
        bet_json = Json::parse(read_file(*req.verify_path));
      } catch (const Json::parse_error& e) {
        throw ParseError(*req.verify_path + ": " + e.what());
      }
      if (!bet_json.is_object() || !bet_json.contains("payoffs") || !bet_json["payoffs"].is_object()) {
        throw ParseError(*req.verify_path + ": expected {\"players\": [...], \"payoffs\": {player: [...]}}");
      }
      std::map<std::string, RationalVector> by_name;
      for (const auto& [name, values] : bet_json["payoffs"].items()) {
        RationalVector f;
        for (const auto& x : values) {
          if (!x.is_string()) throw ParseError(*req.verify_path + ": payoffs must be strings such as \"-3/2\"");
          f.push_back(Rational::parse(x.get<std::string>()));
        }
        by_name[name] = std::move(f);
      }
      const PayoffFamily family = make_family(ts, by_name);
      if (bet_json.contains("players")) {
        std::set<std::string> listed;
        for (const auto& name : bet_json["players"]) {
          if (!name.is_string()) throw ParseError(*req.verify_path + ": \"players\" must list names");
          listed.insert(name.get<std::string>());
        }
        std::set<std::string> keys;
        for (const auto& [name, f] : by_name) keys.insert(name);
        if (listed != keys) throw StructureError("\"players\" does not match the payoff keys");
      }
      const auto v = verify_bet(ts, family);
      if (v.agreeable != is_agreeable_via_locus(ts, family)) {
        throw InternalError("agreeability predicates disagree");
      }
      Json r = em.family(family);
      r["kind"] = bet_kind_name(v.kind);
      r["zero_sum"] = v.zero_sum;
      r["semi_bet"] = v.semi_bet;
      r["agreeable"] = v.agreeable;
      r["weakly_agreeable"] = v.weakly_agreeable;
      r["acceptable"] = v.acceptable;
      em.put(r, "margin", v.margin);
      Json exp = Json::object();
      for (std::size_t k = 0; k < family.players.size(); ++k) {
        exp[ts.player_name(family.players[k])] = em.vec(v.expectations[k]);
      }
      r["expectations"] = exp;
      if (v.certifying_component) r["certifying_component"] = em.labels(*v.certifying_component);
      j["verification"] = r;
      text << "kind: " << bet_kind_name(v.kind) << "\n"
           << "  zero-sum " << yes_no(v.zero_sum) << ", semi-bet " << yes_no(v.semi_bet) << ", agreeable "
           << yes_no(v.agreeable) << ", weakly agreeable " << yes_no(v.weakly_agreeable) << ", acceptable "
           << yes_no(v.acceptable) << "\n";
      em.family_text(text, family, v.expectations);
      return kOk;
    }

    j["kind"] = req.kind;
    if (req.kind == "agreeable") {
      if (const auto b = find_agreeable_bet(ts)) {
        j["bet"] = bet_certificate(em, b->bet, BetKind::Agreeable, text);
        return kOk;
      }
      const auto c = check_consistent(ts, CheckOptions{false});
      j["bet"] = nullptr;
      j["refutation"] = {{"common_prior", prior_certificate(em, *c.witness, ts.all_players())}};
      text << "no agreeable bet: common prior " << em.text(c.witness->values()) << " (verified)\n";
    } else if (req.kind == "weak") {
      if (const auto b = find_weakly_agreeable_bet(ts)) {
        text << "on component " << em.text(*b->component) << " for " << em.text_names(b->players) << ":\n";
        Json c = bet_certificate(em, b->bet, BetKind::WeaklyAgreeable, text);
        c["coalition"] = em.names(b->players);
        c["component"] = em.labels(*b->component);
        j["bet"] = c;
        return kOk;
      }
      const auto u = check_universally_consistent(ts);
      Json list = Json::array();
      for (const auto& cw : u.witnesses) {
        Json c = prior_certificate(em, cw.witness, cw.players);
        c["players"] = em.names(cw.players);
        c["component"] = em.labels(cw.component);
        list.push_back(c);
      }
      j["bet"] = nullptr;
      j["refutation"] = {{"component_priors", list}};
      text << "no weakly agreeable bet: every minimal component has a common prior (" << list.size()
           << " verified)\n";
    } else {
      if (const auto b = find_acceptable_bet(ts)) {
        j["bet"] = bet_certificate(em, b->bet, BetKind::Acceptable, text);
        return kOk;
      }
      const auto s = check_strongly_consistent(ts);
      Json c = prior_certificate(em, *s.witness, ts.all_players());
      em.put(c, "min_cell_mass", s.min_cell_mass);
      j["bet"] = nullptr;
      j["refutation"] = {{"strong_prior", c}};
      text << "no acceptable bet: common prior " << em.text(s.witness->values())
           << " is positive on every cell (verified)\n";
    }
    return kOk;
  });
}

Report run_pump(const std::string& path, const OutputOptions& out, const PumpRequest& req) {
  return run("pump", path, out, true, [&](const Emitter& em, Json& j, std::ostream& text) {
    const TypeSpace& ts = em.space();
    const PumpLevel level = req.level == "weak"        ? PumpLevel::Weak
                            : req.level == "universal" ? PumpLevel::Universal
                                                       : PumpLevel::Strong;
    // Parse the prior before any analysis so bad arguments fail fast.
    std::optional<ProbVector> p;
    if (req.prior) p = parse_prior(*req.prior, ts.num_states());
    j["level"] = req.level;
    const auto pump = money_pump_responder(ts, level);
    if (!pump) {
      j["responder"] = nullptr;
      const Level needed = level == PumpLevel::Weak        ? Level::Consistent
                           : level == PumpLevel::Universal ? Level::UniversallyConsistent
                                                           : Level::StronglyConsistent;
      j["reason"] = std::string("space is at least ") + level_name(needed);
      text << "no " << req.level << " money pump: the space is at least " << level_name(needed) << "\n";
      return kOk;
    }
    Json r = {{"players", em.names(pump->players())}};
    if (pump->component()) r["component"] = em.labels(*pump->component());
    j["responder"] = r;
    text << req.level << " money pump for " << em.text_names(pump->players());
    if (pump->component()) text << " on component " << em.text(*pump->component());
    text << "\n";
    if (!p) return kOk;

    Json resp;
    em.put(resp, "prior", p->values());
    const auto answer = pump->respond(*p);
    if (!answer) {
      resp["semi_bet"] = nullptr;
      resp["reason"] = "the prior gives the component probability 0";
      j["response"] = resp;
      text << "prior " << em.text(p->values()) << " gives the component probability 0; no response needed\n";
      return kOk;
    }
    if (!verify_pump_response(ts, level, pump->players(), *p, *answer)) {
      throw InternalError("pump response failed re-verification");
    }
    resp["semi_bet"] = em.family(answer->semi_bet);
    em.put(resp, "p_sum", answer->p_sum);
    if (answer->nonzero_witness) {
      em.put(resp, "nonzero_witness", answer->nonzero_witness->values());
      em.put(resp, "nonzero_value", answer->nonzero_value);
    }
    resp["verified"] = true;
    j["response"] = resp;

    std::vector<RationalVector> exp;
    for (std::size_t k = 0; k < answer->semi_bet.players.size(); ++k) {
      RationalVector e(ts.num_states());
      for (std::size_t w = 0; w < ts.num_states(); ++w) {
        e[w] = dot(ts.belief(answer->semi_bet.players[k], w), answer->semi_bet.payoffs[k]);
      }
      exp.push_back(std::move(e));
    }
    text << "response to prior " << em.text(p->values()) << " (verified):\n";
    em.family_text(text, answer->semi_bet, exp);
    text << "  P-sum " << em.text(answer->p_sum) << "\n";
    if (answer->nonzero_witness) {
      text << "  nonzero under " << em.text(answer->nonzero_witness->values()) << ": "
           << em.text(answer->nonzero_value) << "\n";
    }
    return kOk;
  });
}

Report run_single(const std::string& path, const OutputOptions& out, const SingleRequest& req) {
  return run("single", path, out, true, [&](const Emitter& em, Json& j, std::ostream& text) {
    const TypeSpace& ts = em.space();
    std::size_t player = 0;
    if (req.player) {
      const auto i = ts.player_index(*req.player);
      if (!i) throw StructureError("unknown player \"" + *req.player + "\"");
      player = *i;
    }
    const ProbVector p = parse_prior(req.prior, ts.num_states());
    j["player"] = ts.player_name(player);
    em.put(j, "prior", p.values());

    const auto c = is_conglomerable(ts, p, player);
    Json cj = {{"conglomerable", c.conglomerable}, {"events_checked", c.events_checked}};
    if (c.violating_event) {
      cj["violating_event"] = em.labels(*c.violating_event);
      em.put(cj, "event_mass", c.event_mass);
      em.put(cj, "min_belief", c.min_belief);
      em.put(cj, "max_belief", c.max_belief);
    }
    j["conglomerability"] = cj;

    const auto d = is_disintegrable(ts, p, player);
    Json dj = {{"disintegrable", d.disintegrable}};
    const auto rows = adequate_aggregations(ts, player);
    if (d.disintegrable) {
      Json mix = Json::array();
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (d.weights[k].is_zero()) continue;
        Json term;
        em.put(term, "weight", d.weights[k]);
        em.put(term, "belief", rows[k]);
        mix.push_back(term);
      }
      dj["mixture"] = mix;
    } else {
      em.put(dj, "separator", d.separator);
      em.put(dj, "threshold", d.threshold);
    }
    j["disintegrability"] = dj;

    text << "player " << ts.player_name(player) << ", prior " << em.text(p.values()) << "\n";
    text << "conglomerable: " << yes_no(c.conglomerable) << ", disintegrable: " << yes_no(d.disintegrable)
         << "\n";
    if (c.violating_event) {
      text << "  event " << em.text(*c.violating_event) << " has prior mass " << em.text(c.event_mass)
           << " outside [" << em.text(c.min_belief) << ", " << em.text(c.max_belief) << "]\n";
    }
    if (d.disintegrable) {
      j["money_pump"] = nullptr;
      return kOk;
    }
    const auto pump = build_money_pump(ts, p, player);
    if (!verify_money_pump(ts, p, pump.payoff, player)) throw InternalError("money pump failed re-verification");
    Json mp;
    em.put(mp, "payoff", pump.payoff);
    em.put(mp, "expectations", pump.expectations);
    em.put(mp, "prior_expectation", dot(p.values(), pump.payoff));
    mp["verified"] = true;
    j["money_pump"] = mp;
    text << "money pump (verified):\n  payoff " << em.text(pump.payoff) << "\n  expectations "
         << em.text(pump.expectations) << "\n  prior expectation " << em.text(dot(p.values(), pump.payoff))
         << "\n";
    return kOk;
  });
}

}  // namespace tsaudit::cli
