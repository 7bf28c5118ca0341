#include "doctest.h"

#include <algorithm>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_space.hpp"
#include "tsaudit/components.hpp"
#include "tsaudit/errors.hpp"

using namespace tsaudit;
using testing_support::load_fixture;

TEST_CASE("point masses at the ends of the four-state chain") {
  const auto ts = load_fixture("ex_pl1");
  const auto report = minimal_components(ts, ts.all_players());
  REQUIRE(report.minimal.size() == 2);
  CHECK(report.minimal[0] == EventSet(0b0001));
  CHECK(report.minimal[1] == EventSet(0b1000));
  CHECK(report.closure[0] == EventSet(0b0001));
  CHECK(report.closure[1] == EventSet(0b1111));
  CHECK(report.closure[2] == EventSet(0b1111));
  CHECK(report.closure[3] == EventSet(0b1000));
}

TEST_CASE("the whole crossed-partition space is one component") {
  const auto ts = load_fixture("ex_pl2");
  const auto report = minimal_components(ts, ts.all_players());
  REQUIRE(report.minimal.size() == 1);
  CHECK(report.minimal[0] == ts.all_states());
  CHECK(is_component(ts, ts.all_players(), ts.all_states()));
  CHECK_FALSE(is_component(ts, ts.all_players(), EventSet(0b0011)));
}

TEST_CASE("components depend on the player set") {
  const auto ts = load_fixture("ex_pl1");
  // Anne alone never leaves her own cells.
  const auto anne = minimal_components(ts, PlayerSet::single(0));
  CHECK(anne.minimal == std::vector<EventSet>{EventSet(0b0001), EventSet(0b0110), EventSet(0b1000)});
  CHECK(is_component(ts, PlayerSet::single(0), EventSet(0b0110)));
  CHECK_FALSE(is_component(ts, ts.all_players(), EventSet(0b0110)));
}

TEST_CASE("common certainty") {
  const auto ts = load_fixture("pl");
  const auto report = minimal_components(ts, ts.all_players());
  CHECK(report.minimal == std::vector<EventSet>{EventSet(0b011), EventSet(0b100)});
  CHECK(commonly_certain_at(ts, ts.all_players(), EventSet(0b011), 0));
  CHECK_FALSE(commonly_certain_at(ts, ts.all_players(), EventSet(0b001), 0));
  CHECK(commonly_certain_locus(report, EventSet(0b011)) == EventSet(0b011));
  CHECK(commonly_certain_locus(report, EventSet(0b101)) == EventSet(0b100));
}

TEST_CASE("bad inputs") {
  const auto ts = load_fixture("pl");
  CHECK_THROWS_AS(build_graph(ts, PlayerSet()), StructureError);
  CHECK_THROWS_AS(build_graph(ts, PlayerSet(0b10)), StructureError);
  CHECK_THROWS_AS(is_component(ts, ts.all_players(), EventSet()), PreconditionError);
}

TEST_CASE("random spaces: graph search agrees with event enumeration") {
  testing_support::SpaceGenerator gen(21);
  for (int trial = 0; trial < 400; ++trial) {
    const auto ts = gen.next();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << ts.num_players()); ++bits) {
      const PlayerSet players(bits);
      const auto report = minimal_components(ts, players);
      auto expected = testing_support::minimal_closed_sets(ts, players);
      auto got = report.minimal;
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      CHECK(got == expected);
      for (std::size_t w = 0; w < ts.num_states(); ++w) {
        CHECK(report.closure[w] == testing_support::closure_of(ts, players, w));
      }
      for (auto s : testing_support::closed_sets(ts, players)) CHECK(is_component(ts, players, s));
    }
  }
}

TEST_CASE("random spaces: minimal components are disjoint and reachable from every state") {
  testing_support::SpaceGenerator gen(22);
  for (int trial = 0; trial < 400; ++trial) {
    const auto ts = gen.next();
    const auto report = minimal_components(ts, ts.all_players());
    REQUIRE(!report.minimal.empty());
    EventSet seen;
    for (auto c : report.minimal) {
      CHECK_FALSE(seen.intersects(c));
      seen = seen | c;
      for (auto w : c.indices()) CHECK(report.closure[w] == c);
    }
    for (std::size_t w = 0; w < ts.num_states(); ++w) {
      bool reaches = false;
      for (auto c : report.minimal) reaches = reaches || c.subset_of(report.closure[w]);
      CHECK(reaches);
    }
  }
}

TEST_CASE("random spaces: the locus of E is exactly where E is commonly certain") {
  testing_support::SpaceGenerator gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ts = gen.next();
    const auto report = minimal_components(ts, ts.all_players());
    const std::uint64_t limit = std::uint64_t{1} << ts.num_states();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      const EventSet e(bits);
      const EventSet locus = commonly_certain_locus(report, e);
      CHECK(locus.subset_of(e));
      for (std::size_t w = 0; w < ts.num_states(); ++w) {
        CHECK(locus.contains(w) == commonly_certain_at(ts, ts.all_players(), e, w));
      }
    }
  }
}
