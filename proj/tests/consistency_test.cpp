#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_space.hpp"
#include "tsaudit/consistency.hpp"
#include "tsaudit/errors.hpp"

using namespace tsaudit;
using testing_support::load_fixture;
using testing_support::q;

namespace {

// p(w) = t_i(w)(w) * p(cell_i(w)) for every listed player and state.
bool balances(const TypeSpace& ts, const RationalVector& p, PlayerSet players) {
  for (auto i : players.indices()) {
    for (std::size_t w = 0; w < ts.num_states(); ++w) {
      Rational cell_mass;
      for (auto v : ts.cell_of(i, w).indices()) cell_mass += p[v];
      if (p[w] != ts.belief(i, w)[w] * cell_mass) return false;
    }
  }
  return true;
}

// Same space with states relabelled by `perm` (new index k is old perm[k]).
TypeSpace permuted(const TypeSpace& ts, const std::vector<std::size_t>& perm) {
  const std::size_t n = ts.num_states();
  std::vector<std::size_t> where(n);
  for (std::size_t k = 0; k < n; ++k) where[perm[k]] = k;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(ts.state_label(perm[k]));
  std::vector<PlayerSpec> specs;
  for (std::size_t i = 0; i < ts.num_players(); ++i) {
    PlayerSpec spec{ts.player_name(i), {}, {}};
    for (const auto& cell : ts.cells(i)) {
      std::vector<std::size_t> c;
      for (auto w : cell.indices()) c.push_back(where[w]);
      spec.partition.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < n; ++k) {
      RationalVector row(n);
      for (std::size_t v = 0; v < n; ++v) row[where[v]] = ts.belief(i, perm[k])[v];
      spec.beliefs.push_back(std::move(row));
    }
    specs.push_back(std::move(spec));
  }
  return TypeSpace(std::move(labels), std::move(specs));
}

}  // namespace

TEST_CASE("fixture levels") {
  CHECK(classify(load_fixture("ex_pl2")).level == Level::None);
  CHECK(classify(load_fixture("pl4")).level == Level::Consistent);
  CHECK(classify(load_fixture("ex_pl1")).level == Level::UniversallyConsistent);
  CHECK(classify(load_fixture("ex_plbet4")).level == Level::StronglyConsistent);
  CHECK(classify(load_fixture("pl")).level == Level::StronglyConsistent);
}

TEST_CASE("crossed partitions: the refutation is an agreeable bet") {
  const auto v = classify(load_fixture("ex_pl2"));
  CHECK_FALSE(v.consistency.witness);
  REQUIRE(v.refuting_bet);
  CHECK(verify_bet(load_fixture("ex_pl2"), v.refuting_bet->bet).agreeable);
  CHECK(witness_vertices(load_fixture("ex_pl2")).empty());
}

TEST_CASE("shared partition: unique prior, failing lower component") {
  const auto ts = load_fixture("pl4");
  const auto v = classify(ts);
  REQUIRE(v.consistency.witness);
  CHECK(v.consistency.witness->values() == q("1/2,1/2,0,0"));
  CHECK(v.consistency.unique == true);
  REQUIRE(v.refuting_bet);
  CHECK(v.refuting_bet->component == EventSet(0b1100));
  CHECK_FALSE(v.strong.strongly_consistent);
  CHECK(v.strong.min_cell_mass == Rational(0));
}

TEST_CASE("point-mass ends: two vertices, neither charges the middle") {
  const auto ts = load_fixture("ex_pl1");
  const auto v = classify(ts);
  CHECK(v.consistency.unique == false);
  REQUIRE(v.universal.universally_consistent);
  CHECK(v.universal.witnesses.size() == 2);
  const auto vertices = witness_vertices(ts);
  REQUIRE(vertices.size() == 2);
  CHECK(vertices[0].values() == q("1,0,0,0"));
  CHECK(vertices[1].values() == q("0,0,0,1"));
  REQUIRE(v.refuting_bet);
  CHECK(verify_bet(ts, v.refuting_bet->bet).acceptable);
}

TEST_CASE("uniform crossed partitions: the uniform prior is the only one") {
  const auto ts = load_fixture("ex_plbet4");
  const auto v = classify(ts);
  CHECK(v.consistency.unique == true);
  REQUIRE(v.strong.witness);
  CHECK(v.strong.witness->values() == q("1/4,1/4,1/4,1/4"));
  CHECK(v.strong.min_cell_mass == Rational(1, 2));
  CHECK_FALSE(v.refuting_bet);
}

TEST_CASE("uniqueness can be skipped") {
  CheckOptions options;
  options.uniqueness = false;
  CHECK_FALSE(check_consistent(load_fixture("pl4"), options).unique.has_value());
}

TEST_CASE("is_common_prior") {
  const auto ts = load_fixture("ex_pl1");
  CHECK(is_common_prior(ts, ProbVector(q("1/3,0,0,2/3")), ts.all_players()));
  CHECK_FALSE(is_common_prior(ts, ProbVector(q("1/4,1/4,1/4,1/4")), ts.all_players()));
  CHECK(is_common_prior(ts, ProbVector(q("1/4,1/4,1/4,1/4")), PlayerSet::single(0)));
}

TEST_CASE("random spaces: levels agree with the mixture oracles") {
  testing_support::SpaceGenerator gen(51);
  int counts[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 600; ++trial) {
    const auto ts = gen.next();
    CAPTURE(trial);
    const auto v = classify(ts);
    const bool c = testing_support::oracle_consistent(ts);
    const bool u = testing_support::oracle_universally_consistent(ts);
    const bool s = testing_support::oracle_strongly_consistent(ts);
    const Level expected = s ? Level::StronglyConsistent : u ? Level::UniversallyConsistent
                                                             : c ? Level::Consistent : Level::None;
    CHECK(v.level == expected);
    ++counts[static_cast<int>(v.level)];

    if (v.consistency.witness) CHECK(balances(ts, v.consistency.witness->values(), ts.all_players()));
    if (v.strong.witness) {
      CHECK(balances(ts, v.strong.witness->values(), ts.all_players()));
      for (std::size_t i = 0; i < ts.num_players(); ++i) {
        for (const auto& cell : ts.cells(i)) CHECK(v.strong.witness->mass(cell) >= v.strong.min_cell_mass);
      }
    }
    for (const auto& cw : v.universal.witnesses) {
      CHECK(balances(ts, cw.witness.values(), cw.players));
      CHECK(cw.witness.support().subset_of(cw.component));
    }
    if (v.level != Level::StronglyConsistent) CHECK(v.refuting_bet.has_value());
  }
  for (int k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(counts[k] > 20);
  }
}

TEST_CASE("random spaces: vertices are common priors and decide uniqueness") {
  testing_support::SpaceGenerator gen(52);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ts = gen.next();
    const auto vertices = witness_vertices(ts);
    const auto r = check_consistent(ts);
    CHECK(vertices.empty() == !r.consistent);
    for (const auto& p : vertices) CHECK(balances(ts, p.values(), ts.all_players()));
    if (r.consistent) {
      CHECK(*r.unique == (vertices.size() == 1));
      // The LP returns a basic solution, which must be among the vertices.
      CHECK(std::find(vertices.begin(), vertices.end(), *r.witness) != vertices.end());
    }
  }
}

TEST_CASE("random spaces: relabelling states preserves the level") {
  testing_support::SpaceGenerator gen(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ts = gen.next();
    std::vector<std::size_t> perm(ts.num_states());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen.rng());
    const auto moved = permuted(ts, perm);
    CHECK(validate(moved).empty());
    CHECK(classify(moved).level == classify(ts).level);
  }
}
