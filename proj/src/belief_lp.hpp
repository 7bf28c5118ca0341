#pragma once

// LP encodings shared by the consistency and bet modules. Not installed.

#include <vector>

#include "tsaudit/lp.hpp"
#include "tsaudit/type_space.hpp"

namespace tsaudit::detail {

/// Variables P(w) >= 0, one per state; rows sum P = 1 and, for every player
/// of `players`, every cell C and w in C: P(w) - t(C, w) P(C) = 0.
/// Zero objective.
LinearProgram common_prior_lp(const TypeSpace& ts, PlayerSet players);

/// common_prior_lp plus a last variable eps in [0, 1], maximized, with
/// P(C) - eps >= 0 for every cell of every player of `players`.
LinearProgram strong_prior_lp(const TypeSpace& ts, PlayerSet players);

/// Variable layout of the bet-search LPs: payoff f_k(w) of the k-th listed
/// player at state w is variable k * n + w; agreeable search appends alpha.
struct BetLayout {
  std::vector<std::size_t> players;
  std::size_t num_states = 0;
  std::size_t var(std::size_t k, std::size_t w) const { return k * num_states + w; }
  std::size_t payoff_vars() const { return players.size() * num_states; }
};

/// maximize alpha s.t. sum_k f_k(w) = 0, E_k(C)[f_k] >= alpha on every cell,
/// -1 <= f <= 1, alpha free.
LinearProgram agreeable_bet_lp(const TypeSpace& ts, const BetLayout& layout);

/// maximize the sum over (player, state) of expectations s.t. zero-sum,
/// every expectation >= 0, -1 <= f <= 1.
LinearProgram acceptable_bet_lp(const TypeSpace& ts, const BetLayout& layout);

BetLayout layout_for(const TypeSpace& ts, PlayerSet players);

/// Solves and re-verifies; InternalError if the certificate does not check.
LpOutcome solve_verified(const LinearProgram& lp, const char* what);

}  // namespace tsaudit::detail
