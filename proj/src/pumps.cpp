#include "tsaudit/pumps.hpp"

#include <algorithm>

#include "tsaudit/consistency.hpp"
#include "tsaudit/errors.hpp"
#include "tsaudit/single_player.hpp"

namespace tsaudit {

const char* pump_level_name(PumpLevel l) {
  switch (l) {
    case PumpLevel::Weak:
      return "weak";
    case PumpLevel::Universal:
      return "universal";
    case PumpLevel::Strong:
      return "strong";
  }
  return "?";
}

namespace {

Rational family_p_sum(const PayoffFamily& family, const ProbVector& p) {
  Rational total;
  for (const auto& f : family.payoffs) total += dot(p.values(), f);
  return total;
}

}  // namespace

PumpResponse MoneyPumpResponder::respond_weak(const ProbVector& p) const {
  // Every player for whom P is not a mixture of own beliefs gets a
  // single-player pump; the others get nothing.
  PumpResponse r;
  bool any = false;
  for (std::size_t i = 0; i < space_.num_players(); ++i) {
    r.semi_bet.players.push_back(i);
    if (is_disintegrable(space_, p, i).disintegrable) {
      r.semi_bet.payoffs.emplace_back(space_.num_states());
      continue;
    }
    r.semi_bet.payoffs.push_back(build_money_pump(space_, p, i).payoff);
    any = true;
  }
  if (!any) throw InternalError("distribution is a common prior of a space without one");
  r.p_sum = family_p_sum(r.semi_bet, p);
  return r;
}

std::optional<PumpResponse> MoneyPumpResponder::respond(const ProbVector& p) const {
  const std::size_t n = level_ == PumpLevel::Universal ? full_states_ : space_.num_states();
  if (p.size() != n) {
    throw StructureError("distribution has " + std::to_string(p.size()) + " entries for " +
                         std::to_string(n) + " states");
  }
  PumpResponse r;
  const TypeSpace* verify_space = &space_;
  switch (level_) {
    case PumpLevel::Weak:
      r = respond_weak(p);
      break;
    case PumpLevel::Universal: {
      const EventSet s = *component_;
      const Rational mass = p.mass(s);
      if (mass.is_zero()) return std::nullopt;
      RationalVector conditional;
      for (auto w : s.indices()) conditional.push_back(p[w] / mass);
      const PumpResponse local = respond_weak(ProbVector(std::move(conditional)));
      const auto members = players_.indices();
      for (std::size_t k = 0; k < local.semi_bet.players.size(); ++k) {
        r.semi_bet.players.push_back(members[local.semi_bet.players[k]]);
        r.semi_bet.payoffs.push_back(zero_extend(local.semi_bet.payoffs[k], s, n));
      }
      r.p_sum = family_p_sum(r.semi_bet, p);
      verify_space = &*full_;
      break;
    }
    case PumpLevel::Strong:
      if (is_common_prior(space_, p, players_)) {
        // Zero the strictly gaining player's payoff. Under a common prior
        // every player's P-expectation of a bet with nonnegative
        // expectations is 0, so the rest sums to 0 under P, and to minus
        // the gain under the gainer's belief at the gaining state.
        r.semi_bet = *acceptable_;
        std::fill(r.semi_bet.payoffs[gainer_].begin(), r.semi_bet.payoffs[gainer_].end(), Rational(0));
        r.p_sum = family_p_sum(r.semi_bet, p);
        r.nonzero_witness = ProbVector(space_.belief(acceptable_->players[gainer_], gain_state_));
      } else {
        r = respond_weak(p);
        r.nonzero_witness = p;
      }
      r.nonzero_value = family_p_sum(r.semi_bet, *r.nonzero_witness);
      break;
  }
  if (!verify_pump_response(*verify_space, level_, players_, p, r)) {
    throw InternalError(std::string(pump_level_name(level_)) + " money pump response failed verification");
  }
  return r;
}

std::optional<MoneyPumpResponder> money_pump_responder(const TypeSpace& ts, PumpLevel level) {
  require_valid(ts);
  switch (level) {
    case PumpLevel::Weak: {
      if (check_consistent(ts, CheckOptions{false}).consistent) return std::nullopt;
      MoneyPumpResponder r(ts);
      r.level_ = level;
      r.players_ = ts.all_players();
      r.full_states_ = ts.num_states();
      return r;
    }
    case PumpLevel::Universal: {
      const auto u = check_universally_consistent(ts);
      if (u.universally_consistent) return std::nullopt;
      const auto& bet = *u.weakly_agreeable_bet;
      MoneyPumpResponder r(induced_subspace(ts, *bet.component, bet.players));
      r.level_ = level;
      r.players_ = bet.players;
      r.component_ = bet.component;
      r.full_states_ = ts.num_states();
      r.full_ = ts;
      return r;
    }
    case PumpLevel::Strong: {
      const auto s = check_strongly_consistent(ts);
      if (s.strongly_consistent) return std::nullopt;
      const Bet& bet = s.acceptable_bet->bet;
      const auto v = verify_bet(ts, bet);
      MoneyPumpResponder r(ts);
      r.level_ = level;
      r.players_ = ts.all_players();
      r.full_states_ = ts.num_states();
      r.acceptable_ = bet;
      const auto [player, state] = v.strict_locus.front();
      for (std::size_t k = 0; k < bet.players.size(); ++k) {
        if (bet.players[k] == player) r.gainer_ = k;
      }
      r.gain_state_ = state;
      return r;
    }
  }
  return std::nullopt;
}

bool verify_pump_response(const TypeSpace& ts, PumpLevel level, PlayerSet players, const ProbVector& p,
                          const PumpResponse& response) {
  const auto& family = response.semi_bet;
  if (p.size() != ts.num_states()) return false;
  if (family.player_set() != players || family.players.size() != family.payoffs.size()) return false;
  for (const auto& f : family.payoffs) {
    if (f.size() != ts.num_states()) return false;
  }
  if (!verify_semi_bet(ts, family)) return false;
  if (family_p_sum(family, p) != response.p_sum) return false;
  if (level != PumpLevel::Strong) return response.p_sum.sign() < 0;

  if (response.p_sum.sign() > 0 || !response.nonzero_witness) return false;
  const ProbVector& q = *response.nonzero_witness;
  if (q.size() != ts.num_states()) return false;
  bool admissible = q == p;
  for (auto i : players.indices()) {
    if (admissible) break;
    admissible = is_disintegrable(ts, q, i).disintegrable;
  }
  const Rational value = family_p_sum(family, q);
  return admissible && value == response.nonzero_value && !value.is_zero();
}

}  // namespace tsaudit
