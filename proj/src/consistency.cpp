#include "tsaudit/consistency.hpp"

#include <algorithm>

#include "belief_lp.hpp"
#include "tsaudit/components.hpp"
#include "tsaudit/errors.hpp"
#include "tsaudit/single_player.hpp"

namespace tsaudit {

const char* level_name(Level l) {
  switch (l) {
    case Level::None:
      return "None";
    case Level::Consistent:
      return "Consistent";
    case Level::UniversallyConsistent:
      return "UniversallyConsistent";
    case Level::StronglyConsistent:
      return "StronglyConsistent";
  }
  return "?";
}

bool is_common_prior(const TypeSpace& ts, const ProbVector& p, PlayerSet players) {
  for (auto i : players.indices()) {
    if (!is_disintegrable(ts, p, i).disintegrable) return false;
  }
  return true;
}

namespace {

ProbVector checked_witness(const TypeSpace& ts, const RationalVector& x, PlayerSet players) {
  auto p = ProbVector::try_make(RationalVector(x.begin(), x.begin() + static_cast<long>(ts.num_states())));
  if (!p) throw InternalError("common-prior LP returned a non-distribution");
  if (!is_common_prior(ts, *p, players)) throw InternalError("witness is not a mixture of some player's beliefs");
  return *p;
}

// Does every coordinate attain a single value over the common priors?
bool prior_is_unique(const TypeSpace& ts) {
  LinearProgram lp = detail::common_prior_lp(ts, ts.all_players());
  for (std::size_t w = 0; w < ts.num_states(); ++w) {
    Rational extremes[2];
    for (int s = 0; s < 2; ++s) {
      std::fill(lp.objective.begin(), lp.objective.end(), Rational(0));
      lp.objective[w] = s == 0 ? 1 : -1;
      const auto out = detail::solve_verified(lp, "uniqueness probe");
      if (!out.optimal()) throw InternalError("uniqueness probe on a consistent space is not optimal");
      extremes[s] = s == 0 ? out.as_optimal().value : -out.as_optimal().value;
    }
    if (extremes[0] != extremes[1]) return false;
  }
  return true;
}

}  // namespace

ConsistencyResult check_consistent(const TypeSpace& ts, const CheckOptions& options) {
  const auto out = detail::solve_verified(detail::common_prior_lp(ts, ts.all_players()), "common-prior check");
  ConsistencyResult r;
  r.consistent = out.optimal();
  if (r.consistent) {
    r.witness = checked_witness(ts, out.as_optimal().x, ts.all_players());
    if (options.uniqueness) r.unique = prior_is_unique(ts);
    return r;
  }
  r.agreeable_bet = find_agreeable_bet(ts);
  if (!r.agreeable_bet) throw InternalError("inconsistent space without an agreeable bet");
  return r;
}

UniversalResult check_universally_consistent(const TypeSpace& ts) {
  UniversalResult r;
  const std::size_t n = ts.num_states();
  for (const PlayerSet players : coalitions(ts.num_players())) {
    const auto report = minimal_components(ts, players);
    for (const EventSet s : report.minimal) {
      const TypeSpace sub = induced_subspace(ts, s, players);
      const auto out = detail::solve_verified(detail::common_prior_lp(sub, sub.all_players()), "component prior check");
      if (!out.optimal()) {
        r.universally_consistent = false;
        r.witnesses.clear();
        r.weakly_agreeable_bet = find_weakly_agreeable_bet(ts);
        if (!r.weakly_agreeable_bet) throw InternalError("failing component without a weakly agreeable bet");
        return r;
      }
      const ProbVector local = checked_witness(sub, out.as_optimal().x, sub.all_players());
      ProbVector lifted(zero_extend(local.values(), s, n));
      if (!is_common_prior(ts, lifted, players)) throw InternalError("lifted component witness is not a common prior");
      r.witnesses.push_back(ComponentWitness{players, s, std::move(lifted)});
    }
  }
  r.universally_consistent = true;
  if (find_weakly_agreeable_bet(ts)) throw InternalError("universally consistent space with a weakly agreeable bet");
  return r;
}

StrongResult check_strongly_consistent(const TypeSpace& ts) {
  const auto lp = detail::strong_prior_lp(ts, ts.all_players());
  const auto out = detail::solve_verified(lp, "positive-cell prior check");
  StrongResult r;
  if (out.optimal()) r.min_cell_mass = out.as_optimal().value;
  r.strongly_consistent = r.min_cell_mass.sign() > 0;
  if (r.strongly_consistent) {
    r.witness = checked_witness(ts, out.as_optimal().x, ts.all_players());
    for (auto i : ts.all_players().indices()) {
      for (const auto& cell : ts.cells(i)) {
        if (r.witness->mass(cell).sign() <= 0) throw InternalError("strong witness misses a cell");
      }
    }
  }
  r.acceptable_bet = find_acceptable_bet(ts);
  if (r.strongly_consistent == r.acceptable_bet.has_value()) {
    throw InternalError("strong consistency and acceptable-bet search disagree");
  }
  return r;
}

ConsistencyVerdict classify(const TypeSpace& ts, const CheckOptions& options) {
  ConsistencyVerdict v;
  v.consistency = check_consistent(ts, options);
  v.universal = check_universally_consistent(ts);
  v.strong = check_strongly_consistent(ts);
  const bool c = v.consistency.consistent;
  const bool u = v.universal.universally_consistent;
  const bool s = v.strong.strongly_consistent;
  if ((s && !u) || (u && !c)) throw InternalError("consistency levels violate the hierarchy");
  if (s) {
    v.level = Level::StronglyConsistent;
  } else if (u) {
    v.level = Level::UniversallyConsistent;
    v.refuting_bet = v.strong.acceptable_bet;
  } else if (c) {
    v.level = Level::Consistent;
    v.refuting_bet = v.universal.weakly_agreeable_bet;
  } else {
    v.level = Level::None;
    v.refuting_bet = v.consistency.agreeable_bet;
  }
  return v;
}

std::vector<ProbVector> witness_vertices(const TypeSpace& ts) {
  const std::size_t n = ts.num_states();
  if (n > 16) throw PreconditionError("witness vertex enumeration is limited to 16 states");
  const auto lp = detail::common_prior_lp(ts, ts.all_players());
  std::vector<ProbVector> out;
  // A feasible point is a vertex iff the equality rows restricted to its
  // support have full column rank; then it is the unique solution with that
  // support. Enumerate supports and solve by exact elimination.
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const auto support = EventSet(bits).indices();
    const std::size_t k = support.size();
    std::vector<RationalVector> rows;
    for (const auto& c : lp.constraints) {
      RationalVector r(k + 1);
      for (std::size_t j = 0; j < k; ++j) r[j] = c.coeffs[support[j]];
      r[k] = c.rhs;
      rows.push_back(std::move(r));
    }
    // Gauss-Jordan on the augmented matrix.
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
      std::size_t p = rank;
      while (p < rows.size() && rows[p][col].is_zero()) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      const Rational piv = rows[rank][col];
      for (auto& x : rows[rank]) x /= piv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col].is_zero()) continue;
        const Rational f = rows[r][col];
        for (std::size_t j = col; j <= k; ++j) rows[r][j] -= f * rows[rank][j];
      }
      pivot_col.push_back(col);
      ++rank;
    }
    if (rank < k) continue;
    bool consistent_system = true;
    for (std::size_t r = rank; r < rows.size(); ++r) consistent_system = consistent_system && rows[r][k].is_zero();
    if (!consistent_system) continue;
    RationalVector x(n);
    bool positive = true;
    for (std::size_t r = 0; r < rank; ++r) {
      x[support[pivot_col[r]]] = rows[r][k];
      positive = positive && rows[r][k].sign() > 0;
    }
    if (!positive || !is_feasible_point(lp, x)) continue;
    out.emplace_back(std::move(x));
  }
  return out;
}

}  // namespace tsaudit
