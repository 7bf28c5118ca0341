#include "belief_lp.hpp"

#include <string>

#include "tsaudit/errors.hpp"

namespace tsaudit::detail {

LinearProgram common_prior_lp(const TypeSpace& ts, PlayerSet players) {
  const std::size_t n = ts.num_states();
  LinearProgram lp;
  for (std::size_t w = 0; w < n; ++w) lp.add_variable(0, Rational(0), std::nullopt);
  lp.add_constraint(RationalVector(n, Rational(1)), Relation::Equal, 1);
  for (auto i : players.indices()) {
    for (const auto& cell : ts.cells(i)) {
      const auto& row = ts.belief(i, cell.first());
      for (auto w : cell.indices()) {
        RationalVector coeffs(n);
        for (auto v : cell.indices()) coeffs[v] = -row[w];
        coeffs[w] += 1;
        lp.add_constraint(std::move(coeffs), Relation::Equal, 0);
      }
    }
  }
  return lp;
}

LinearProgram strong_prior_lp(const TypeSpace& ts, PlayerSet players) {
  LinearProgram lp = common_prior_lp(ts, players);
  const std::size_t eps = lp.add_variable(1, Rational(0), Rational(1));
  for (auto i : players.indices()) {
    for (const auto& cell : ts.cells(i)) {
      RationalVector coeffs(eps + 1);
      for (auto w : cell.indices()) coeffs[w] = 1;
      coeffs[eps] = -1;
      lp.add_constraint(std::move(coeffs), Relation::GreaterEqual, 0);
    }
  }
  return lp;
}

BetLayout layout_for(const TypeSpace& ts, PlayerSet players) {
  return BetLayout{players.indices(), ts.num_states()};
}

namespace {

void add_payoff_variables(LinearProgram& lp, const BetLayout& layout) {
  for (std::size_t j = 0; j < layout.payoff_vars(); ++j) lp.add_variable(0, Rational(-1), Rational(1));
}

void add_zero_sum_rows(LinearProgram& lp, const BetLayout& layout) {
  for (std::size_t w = 0; w < layout.num_states; ++w) {
    RationalVector coeffs(lp.num_vars());
    for (std::size_t k = 0; k < layout.players.size(); ++k) coeffs[layout.var(k, w)] = 1;
    lp.add_constraint(std::move(coeffs), Relation::Equal, 0);
  }
}

}  // namespace

LinearProgram agreeable_bet_lp(const TypeSpace& ts, const BetLayout& layout) {
  LinearProgram lp;
  add_payoff_variables(lp, layout);
  const std::size_t alpha = lp.add_variable(1, std::nullopt, std::nullopt);
  add_zero_sum_rows(lp, layout);
  for (std::size_t k = 0; k < layout.players.size(); ++k) {
    const std::size_t i = layout.players[k];
    for (const auto& cell : ts.cells(i)) {
      const auto& row = ts.belief(i, cell.first());
      RationalVector coeffs(lp.num_vars());
      for (std::size_t w = 0; w < layout.num_states; ++w) coeffs[layout.var(k, w)] = row[w];
      coeffs[alpha] = -1;
      lp.add_constraint(std::move(coeffs), Relation::GreaterEqual, 0);
    }
  }
  return lp;
}

LinearProgram acceptable_bet_lp(const TypeSpace& ts, const BetLayout& layout) {
  LinearProgram lp;
  add_payoff_variables(lp, layout);
  add_zero_sum_rows(lp, layout);
  for (std::size_t k = 0; k < layout.players.size(); ++k) {
    const std::size_t i = layout.players[k];
    for (const auto& cell : ts.cells(i)) {
      const auto& row = ts.belief(i, cell.first());
      RationalVector coeffs(lp.num_vars());
      for (std::size_t w = 0; w < layout.num_states; ++w) coeffs[layout.var(k, w)] = row[w];
      // Each state of the cell contributes the same expectation to the objective.
      const Rational weight(static_cast<long>(cell.count()));
      for (std::size_t w = 0; w < layout.num_states; ++w) {
        if (!row[w].is_zero()) lp.objective[layout.var(k, w)] += weight * row[w];
      }
      lp.add_constraint(std::move(coeffs), Relation::GreaterEqual, 0);
    }
  }
  return lp;
}

LpOutcome solve_verified(const LinearProgram& lp, const char* what) {
  auto out = solve(lp);
  if (!verify_certificate(lp, out)) {
    throw InternalError(std::string(what) + ": LP certificate failed verification");
  }
  return out;
}

}  // namespace tsaudit::detail
