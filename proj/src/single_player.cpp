#include "tsaudit/single_player.hpp"

#include "tsaudit/errors.hpp"
#include "tsaudit/lp.hpp"

namespace tsaudit {

namespace {

void check_inputs(const TypeSpace& ts, const ProbVector& p, std::size_t player) {
  if (player >= ts.num_players()) throw StructureError("player index out of range");
  if (p.size() != ts.num_states()) {
    throw StructureError("distribution has " + std::to_string(p.size()) + " entries for " +
                         std::to_string(ts.num_states()) + " states");
  }
}

}  // namespace

ConglomerabilityResult is_conglomerable(const TypeSpace& ts, const ProbVector& p, std::size_t player,
                                        const std::vector<EventSet>* events) {
  check_inputs(ts, p, player);
  const std::size_t n = ts.num_states();
  std::vector<EventSet> all;
  if (events == nullptr) {
    if (n > kMaxConglomerabilityStates) {
      throw PreconditionError("conglomerability over all events needs at most " +
                              std::to_string(kMaxConglomerabilityStates) +
                              " states; supply an explicit event list");
    }
    all.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) all.emplace_back(bits);
    events = &all;
  }
  // Beliefs are constant on cells, so one state per cell suffices.
  std::vector<std::size_t> reps;
  for (const auto& cell : ts.cells(player)) reps.push_back(cell.first());

  ConglomerabilityResult result;
  for (const EventSet e : *events) {
    ++result.events_checked;
    const Rational mass = p.mass(e);
    Rational lo = ts.belief_of(player, reps[0], e);
    Rational hi = lo;
    for (std::size_t k = 1; k < reps.size(); ++k) {
      const Rational v = ts.belief_of(player, reps[k], e);
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    if (mass < lo || mass > hi) {
      result.conglomerable = false;
      result.violating_event = e;
      result.event_mass = mass;
      result.min_belief = lo;
      result.max_belief = hi;
      return result;
    }
  }
  return result;
}

std::vector<RationalVector> adequate_aggregations(const TypeSpace& ts, std::size_t player) {
  if (player >= ts.num_players()) throw StructureError("player index out of range");
  std::vector<RationalVector> rows;
  for (std::size_t w = 0; w < ts.num_states(); ++w) {
    const auto& row = ts.belief(player, w);
    bool seen = false;
    for (const auto& r : rows) seen = seen || r == row;
    if (!seen) rows.push_back(row);
  }
  return rows;
}

DisintegrabilityResult is_disintegrable(const TypeSpace& ts, const ProbVector& p, std::size_t player) {
  check_inputs(ts, p, player);
  const auto rows = adequate_aggregations(ts, player);
  const std::size_t n = ts.num_states();
  const std::size_t v = rows.size();

  // Variables: one weight per distinct row. Row 0: weights sum to one;
  // row 1 + k: mixture reproduces P at state k.
  LinearProgram lp;
  for (std::size_t j = 0; j < v; ++j) lp.add_variable(0, Rational(0), std::nullopt);
  lp.add_constraint(RationalVector(v, Rational(1)), Relation::Equal, 1);
  for (std::size_t k = 0; k < n; ++k) {
    RationalVector coeffs(v);
    for (std::size_t j = 0; j < v; ++j) coeffs[j] = rows[j][k];
    lp.add_constraint(std::move(coeffs), Relation::Equal, p[k]);
  }
  const auto out = solve(lp);
  if (!verify_certificate(lp, out)) throw InternalError("hull-membership certificate failed to verify");

  DisintegrabilityResult result;
  if (out.optimal()) {
    result.disintegrable = true;
    result.weights = out.as_optimal().x;
    return result;
  }
  if (!out.infeasible()) throw InternalError("hull-membership LP reported unbounded");
  // From the Farkas vector (y0, y): y0 + <y, row> <= 0 for every row and
  // y0 + <y, P> > 0. With f = -y this reads <f, row> >= y0 > <f, P>.
  const auto& y = out.as_infeasible().y;
  result.separator.resize(n);
  for (std::size_t k = 0; k < n; ++k) result.separator[k] = -y[1 + k];
  result.threshold = y[0];
  return result;
}

RationalVector expectations(const TypeSpace& ts, std::size_t player, const RationalVector& f) {
  if (player >= ts.num_players()) throw StructureError("player index out of range");
  if (f.size() != ts.num_states()) {
    throw StructureError("payoff has " + std::to_string(f.size()) + " entries for " +
                         std::to_string(ts.num_states()) + " states");
  }
  RationalVector out(ts.num_states());
  for (std::size_t w = 0; w < ts.num_states(); ++w) out[w] = dot(ts.belief(player, w), f);
  return out;
}

NonNegativeBet build_money_pump(const TypeSpace& ts, const ProbVector& p, std::size_t player) {
  const auto d = is_disintegrable(ts, p, player);
  if (d.disintegrable) {
    throw PreconditionError("distribution is a mixture of the player's beliefs; no money pump exists");
  }
  // Shift by the smallest expectation so the worst state breaks even.
  const auto raw = expectations(ts, player, d.separator);
  Rational c = raw[0];
  for (const auto& e : raw) {
    if (e < c) c = e;
  }
  NonNegativeBet bet;
  bet.payoff = d.separator;
  for (auto& x : bet.payoff) x -= c;
  bet.expectations = expectations(ts, player, bet.payoff);
  if (!verify_money_pump(ts, p, bet.payoff, player)) {
    throw InternalError("constructed money pump failed verification");
  }
  return bet;
}

bool verify_money_pump(const TypeSpace& ts, const ProbVector& p, const RationalVector& f,
                       std::size_t player) {
  check_inputs(ts, p, player);
  if (f.size() != ts.num_states()) return false;
  for (const auto& e : expectations(ts, player, f)) {
    if (e.sign() < 0) return false;
  }
  return dot(p.values(), f).sign() < 0;
}

}  // namespace tsaudit
