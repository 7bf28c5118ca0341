#pragma once

#include <optional>
#include <string>

#include "tsaudit/bets.hpp"
#include "tsaudit/type_space.hpp"

namespace tsaudit {

enum class PumpLevel { Weak, Universal, Strong };

const char* pump_level_name(PumpLevel l);

struct PumpResponse {
  SemiBet semi_bet;
  /// sum over listed players of the P-expectation of their payoff.
  Rational p_sum;
  /// Strong level: a distribution, equal to P or one of the players'
  /// beliefs, under which the summed payoff has nonzero expectation.
  std::optional<ProbVector> nonzero_witness;
  Rational nonzero_value;
};

/// Answers every admissible distribution with a semi-bet that loses money in
/// expectation (Weak, Universal) or weakly loses while being non-trivial
/// somewhere (Strong). Holds its own copy of everything it needs.
class MoneyPumpResponder {
 public:
  PumpLevel level() const { return level_; }
  /// Players the semi-bets are offered to.
  PlayerSet players() const { return players_; }
  /// Universal level: the component on which the pump runs.
  std::optional<EventSet> component() const { return component_; }

  /// Nullopt only at the Universal level, for P with P(component) = 0, which
  /// the pump is not required to answer. Every response is verified before
  /// it is returned (InternalError otherwise).
  std::optional<PumpResponse> respond(const ProbVector& p) const;

 private:
  friend std::optional<MoneyPumpResponder> money_pump_responder(const TypeSpace& ts, PumpLevel level);

  explicit MoneyPumpResponder(TypeSpace space) : space_(std::move(space)) {}

  PumpResponse respond_weak(const ProbVector& p) const;

  PumpLevel level_ = PumpLevel::Weak;
  TypeSpace space_;          // full space (Weak, Strong) or induced component space (Universal)
  std::size_t full_states_ = 0;
  PlayerSet players_;
  std::optional<EventSet> component_;
  std::optional<Bet> acceptable_;  // Strong
  std::size_t gainer_ = 0;         // Strong: index into acceptable_->players
  std::size_t gain_state_ = 0;
  std::optional<TypeSpace> full_;  // Universal: the original space, for verification
};

/// Nullopt iff the matching consistency level holds.
std::optional<MoneyPumpResponder> money_pump_responder(const TypeSpace& ts, PumpLevel level);

/// Exact check of one response for the given level and player set.
bool verify_pump_response(const TypeSpace& ts, PumpLevel level, PlayerSet players, const ProbVector& p,
                          const PumpResponse& response);

}  // namespace tsaudit
