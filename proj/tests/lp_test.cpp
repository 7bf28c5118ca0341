#include "doctest.h"

#include <random>

#include "tsaudit/errors.hpp"
#include "tsaudit/lp.hpp"

using namespace tsaudit;

namespace {

LinearProgram box_lp() {
  LinearProgram lp;
  lp.add_variable(1, Rational(0), std::nullopt);
  lp.add_constraint({1}, Relation::LessEqual, 1);
  return lp;
}

// Common-prior feasibility for the two-player, four-state space whose
// partitions are {12|34} and {14|23}; only zero-objective feasibility.
LinearProgram crossed_partitions_prior_lp() {
  LinearProgram lp;
  for (int k = 0; k < 4; ++k) lp.add_variable(0, Rational(0), std::nullopt);
  lp.add_constraint({1, 1, 1, 1}, Relation::Equal, 1);
  const Rational h(1, 2);
  // Player 1, cell {1,2} row (1/2,1/2,0,0); cell {3,4} row (0,0,1/2,1/2).
  lp.add_constraint({1 - h, -h, 0, 0}, Relation::Equal, 0);
  lp.add_constraint({-h, 1 - h, 0, 0}, Relation::Equal, 0);
  lp.add_constraint({0, 0, 1 - h, -h}, Relation::Equal, 0);
  lp.add_constraint({0, 0, -h, 1 - h}, Relation::Equal, 0);
  // Player 2, cell {1,4} row (1/2,0,0,1/2); cell {2,3} row (0,1,0,0).
  lp.add_constraint({1 - h, 0, 0, -h}, Relation::Equal, 0);
  lp.add_constraint({-h, 0, 0, 1 - h}, Relation::Equal, 0);
  lp.add_constraint({0, 0, -1, 0}, Relation::Equal, 0);
  lp.add_constraint({0, 0, 1, 0}, Relation::Equal, 0);
  return lp;
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int d = den(rng);
  std::uniform_int_distribution<int> num(lo * d, hi * d);
  return Rational(num(rng), d);
}

LinearProgram random_lp(std::mt19937_64& rng, bool degenerate) {
  std::uniform_int_distribution<int> nvars(1, 20);
  std::uniform_int_distribution<int> nrows(0, 12);
  std::uniform_int_distribution<int> pick(0, 9);
  const int n = nvars(rng);
  const int m = nrows(rng);
  LinearProgram lp;
  for (int j = 0; j < n; ++j) {
    std::optional<Rational> lo, hi;
    const int kind = pick(rng);
    if (kind < 5) {
      lo = Rational(0);
    } else if (kind < 7) {
      lo = random_rational(rng, -3, 0, 4);
      hi = *lo + random_rational(rng, 0, 3, 4);
    } else if (kind < 8) {
      hi = random_rational(rng, -2, 2, 3);
    }
    lp.add_variable(random_rational(rng, -3, 3, 5), lo, hi);
  }
  for (int r = 0; r < m; ++r) {
    RationalVector row(n);
    for (int j = 0; j < n; ++j) {
      if (pick(rng) < 5) row[j] = degenerate ? Rational(pick(rng) % 3 - 1) : random_rational(rng, -4, 4, 6);
    }
    const int rel = pick(rng);
    const Relation relation = rel < 5 ? Relation::LessEqual : rel < 8 ? Relation::GreaterEqual : Relation::Equal;
    const Rational rhs = degenerate ? Rational(pick(rng) < 6 ? 0 : 1) : random_rational(rng, -3, 5, 6);
    lp.add_constraint(std::move(row), relation, rhs);
  }
  return lp;
}

}  // namespace

TEST_CASE("single-variable box optimum") {
  const auto lp = box_lp();
  const auto out = solve(lp);
  REQUIRE(out.optimal());
  CHECK(out.as_optimal().value == Rational(1));
  CHECK(out.as_optimal().x == RationalVector{1});
  CHECK(verify_certificate(lp, out));
}

TEST_CASE("contradictory equalities yield a Farkas vector") {
  LinearProgram lp;
  lp.add_variable(0, std::nullopt, std::nullopt);
  lp.add_constraint({1}, Relation::Equal, 1);
  lp.add_constraint({1}, Relation::Equal, 2);
  const auto out = solve(lp);
  REQUIRE(out.infeasible());
  const auto& y = out.as_infeasible().y;
  CHECK(y[0] == -y[1]);
  CHECK(!y[0].is_zero());
  CHECK(verify_certificate(lp, out));
}

TEST_CASE("common-prior system of the crossed-partition space is infeasible") {
  const auto lp = crossed_partitions_prior_lp();
  const auto out = solve(lp);
  REQUIRE(out.infeasible());
  CHECK(verify_certificate(lp, out));
}

TEST_CASE("hand-supplied uniform prior certificate verifies") {
  // Two players with partitions {12|34} and {13|24}, each row uniform on its
  // cell. Uniform is a common prior; with a zero objective the zero dual
  // certifies optimality.
  LinearProgram lp;
  for (int k = 0; k < 4; ++k) lp.add_variable(0, Rational(0), std::nullopt);
  lp.add_constraint({1, 1, 1, 1}, Relation::Equal, 1);
  const Rational h(1, 2);
  lp.add_constraint({h, -h, 0, 0}, Relation::Equal, 0);
  lp.add_constraint({0, 0, h, -h}, Relation::Equal, 0);
  lp.add_constraint({h, 0, -h, 0}, Relation::Equal, 0);
  lp.add_constraint({0, h, 0, -h}, Relation::Equal, 0);
  const Rational q(1, 4);
  Optimal opt{0, {q, q, q, q}, RationalVector(5), RationalVector(4), RationalVector(4)};
  CHECK(verify_certificate(lp, LpOutcome{opt}));
  opt.x[0] = Rational(1, 3);
  CHECK_FALSE(verify_certificate(lp, LpOutcome{opt}));
}

TEST_CASE("perturbed solution is rejected") {
  const auto lp = box_lp();
  auto out = solve(lp);
  REQUIRE(out.optimal());
  std::get<Optimal>(out.result).x[0] = Rational(1, 2);
  CHECK_FALSE(verify_certificate(lp, out));
}

TEST_CASE("unbounded objective yields a ray") {
  LinearProgram lp;
  lp.add_variable(1, Rational(0), std::nullopt);
  lp.add_variable(1, Rational(0), std::nullopt);
  lp.add_constraint({1, -1}, Relation::LessEqual, 2);
  const auto out = solve(lp);
  REQUIRE(out.unbounded());
  CHECK(verify_certificate(lp, out));
  auto bad = out;
  std::get<Unbounded>(bad.result).ray = {1, -1};
  CHECK_FALSE(verify_certificate(lp, bad));
}

TEST_CASE("crossed bounds are infeasible") {
  LinearProgram lp;
  lp.add_variable(0, Rational(2), Rational(1));
  const auto out = solve(lp);
  REQUIRE(out.infeasible());
  CHECK(verify_certificate(lp, out));
}

TEST_CASE("free variables and >= rows") {
  LinearProgram lp;
  lp.add_variable(-1, std::nullopt, std::nullopt);
  lp.add_variable(-1, std::nullopt, std::nullopt);
  lp.add_constraint({1, 1}, Relation::GreaterEqual, 3);
  lp.add_constraint({1, -1}, Relation::Equal, 1);
  const auto out = solve(lp);
  REQUIRE(out.optimal());
  CHECK(out.as_optimal().value == Rational(-3));
  CHECK(out.as_optimal().x == RationalVector{2, 1});
  CHECK(verify_certificate(lp, out));
}

TEST_CASE("malformed dimensions are structural errors") {
  LinearProgram lp;
  lp.add_variable();
  lp.constraints.push_back({{1, 2}, Relation::LessEqual, 0});
  CHECK_THROWS_AS(solve(lp), StructureError);
  CHECK_FALSE(verify_certificate(lp, LpOutcome{Infeasible{}}));
}

TEST_CASE("random LPs: every outcome carries a valid certificate") {
  std::mt19937_64 rng(20260901);
  int counts[3] = {0, 0, 0};
  for (int trial = 0; trial < 600; ++trial) {
    const auto lp = random_lp(rng, trial % 2 == 1);
    const auto out = solve(lp);
    CAPTURE(trial);
    REQUIRE(verify_certificate(lp, out));
    counts[out.result.index()]++;
    // Deterministic: a second solve gives the same answer.
    const auto again = solve(lp);
    CHECK(again.result.index() == out.result.index());
    if (out.optimal()) CHECK(again.as_optimal().x == out.as_optimal().x);
  }
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
}

TEST_CASE("positive row scaling preserves status and membership") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> scale(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto lp = random_lp(rng, trial % 3 == 0);
    auto scaled = lp;
    for (auto& row : scaled.constraints) {
      const Rational s(scale(rng), scale(rng));
      for (auto& a : row.coeffs) a *= s;
      row.rhs *= s;
    }
    const auto a = solve(lp);
    const auto b = solve(scaled);
    CAPTURE(trial);
    REQUIRE(a.result.index() == b.result.index());
    CHECK(verify_certificate(scaled, b));
    if (a.optimal()) {
      CHECK(a.as_optimal().value == b.as_optimal().value);
      CHECK(is_feasible_point(scaled, a.as_optimal().x));
      CHECK(is_feasible_point(lp, b.as_optimal().x));
    }
  }
}
