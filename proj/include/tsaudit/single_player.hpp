#pragma once

#include <optional>
#include <vector>

#include "tsaudit/type_space.hpp"

namespace tsaudit {

// Every function here looks at one player of a type space (the only player
// of a single-player space by default).

/// Largest state count for which the default all-events check is allowed.
inline constexpr std::size_t kMaxConglomerabilityStates = 20;

struct ConglomerabilityResult {
  bool conglomerable = true;
  /// First event E with P(E) outside [min_w t(w,E), max_w t(w,E)].
  std::optional<EventSet> violating_event;
  Rational event_mass;
  Rational min_belief;
  Rational max_belief;
  std::size_t events_checked = 0;
};

/// Checks all 2^n events when `events` is null; refuses (PreconditionError)
/// when n exceeds kMaxConglomerabilityStates and no list is supplied.
ConglomerabilityResult is_conglomerable(const TypeSpace& ts, const ProbVector& p,
                                        std::size_t player = 0,
                                        const std::vector<EventSet>* events = nullptr);

/// Distinct belief rows of the player, in order of first appearance; their
/// convex hull is the set of adequate aggregations.
std::vector<RationalVector> adequate_aggregations(const TypeSpace& ts, std::size_t player = 0);

struct DisintegrabilityResult {
  bool disintegrable = false;
  /// When disintegrable: convex weights over adequate_aggregations() rows
  /// reproducing P exactly.
  RationalVector weights;
  /// When not: f and b with <f, t(w)> >= b for every state w and <f, P> < b.
  RationalVector separator;
  Rational threshold;
};

DisintegrabilityResult is_disintegrable(const TypeSpace& ts, const ProbVector& p,
                                        std::size_t player = 0);

/// Payoff f with the player's expectation at every state >= 0.
struct NonNegativeBet {
  RationalVector payoff;
  RationalVector expectations;  // per state
};

/// f with every per-state expectation >= 0 (at least one exactly 0) and
/// <f, P> < 0. PreconditionError when P is disintegrable.
NonNegativeBet build_money_pump(const TypeSpace& ts, const ProbVector& p, std::size_t player = 0);

/// Per-state expectations of f under the player's beliefs.
RationalVector expectations(const TypeSpace& ts, std::size_t player, const RationalVector& f);

/// Exact check that f is a non-negative bet with strictly negative P-expectation.
bool verify_money_pump(const TypeSpace& ts, const ProbVector& p, const RationalVector& f,
                       std::size_t player = 0);

}  // namespace tsaudit
