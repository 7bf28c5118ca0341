#include "doctest.h"

#include <string>

#include "support/fixtures.hpp"
#include "support/random_space.hpp"
#include "tsaudit/errors.hpp"
#include "tsaudit/tsjson.hpp"
#include "tsaudit/type_space.hpp"

using namespace tsaudit;
using testing_support::load_fixture;
using testing_support::q;

namespace {

const char* kTwoByTwo = R"({
  "states": ["a", "b", "c", "d"],
  "players": [
    {"name": "1", "partition": [["a", "b"], ["c", "d"]],
     "beliefs": {"a": ["1/2", "1/2", "0", "0"], "c": ["0", "0", "1/3", "2/3"]}}
  ]
})";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

bool has_axiom(const std::vector<Violation>& v, Axiom a) {
  for (const auto& x : v) {
    if (x.axiom == a) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("crossed-partition fixture parses and validates") {
  const auto ts = load_fixture("ex_pl2");
  CHECK(ts.num_states() == 4);
  CHECK(ts.num_players() == 2);
  CHECK(validate(ts).empty());
  CHECK(ts.belief(1, 2) == q("0,1,0,0"));
  CHECK(ts.belief(1, 3) == q("1/2,0,0,1/2"));
}

TEST_CASE("all fixtures are valid") {
  for (const char* name : {"ex_pl2", "pl4", "ex_pl1", "ex_plbet4", "pl"}) {
    CAPTURE(name);
    CHECK(validate(load_fixture(name)).empty());
  }
}

TEST_CASE("belief supported outside its cell violates the truth axiom") {
  const auto ts = parse_type_space(replace(kTwoByTwo, R"("c": ["0", "0", "1/3", "2/3"])",
                                           R"("c": ["1/2", "1/2", "0", "0"])"));
  const auto v = validate(ts);
  REQUIRE(!v.empty());
  CHECK(has_axiom(v, Axiom::Truth));
  CHECK_FALSE(has_axiom(v, Axiom::Probability));
  CHECK(v.front().player == 0);
  CHECK(v.front().message.find("\"a\"") != std::string::npos);
}

TEST_CASE("differing rows inside one cell violate measurability") {
  const auto ts = parse_type_space(replace(kTwoByTwo, R"("c": ["0", "0", "1/3", "2/3"])",
                                           R"("c": ["0", "0", "1/3", "2/3"], "d": ["0", "0", "2/3", "1/3"])"));
  const auto v = validate(ts);
  REQUIRE(v.size() == 1);
  CHECK(v[0].axiom == Axiom::Measurability);
  CHECK(v[0].state == 3);
}

TEST_CASE("row sums and negative entries are probability violations") {
  const auto ts = parse_type_space(replace(kTwoByTwo, R"("1/3", "2/3")", R"("1/3", "1/3")"));
  const auto v = validate(ts);
  REQUIRE(!v.empty());
  CHECK(v[0].axiom == Axiom::Probability);
  CHECK(v[0].message.find("row sum 2/3 != 1") != std::string::npos);
  const auto neg = parse_type_space(replace(kTwoByTwo, R"("1/3", "2/3")", R"("-1/3", "4/3")"));
  CHECK(has_axiom(validate(neg), Axiom::Probability));
  CHECK_THROWS_AS(require_valid(neg), StructureError);
}

TEST_CASE("thirds parse to exact rationals") {
  const auto ts = parse_type_space(R"({"states": ["x", "y", "z"], "players": [
    {"name": "p", "partition": [["x", "y", "z"]], "beliefs": {"x": ["1/3", "1/3", "1/3"]}}]})");
  CHECK(sum(ts.belief(0, 2)) == Rational(1));
  CHECK(ts.belief(0, 1)[0] == Rational(1, 3));
  CHECK(validate(ts).empty());
}

TEST_CASE("malformed input reports where it failed") {
  SUBCASE("zero denominator") {
    try {
      parse_type_space(replace(kTwoByTwo, R"("1/3", "2/3")", R"("1/0", "2/3")"));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("/players/0/beliefs/c/2") != std::string::npos);
    }
  }
  SUBCASE("floats are refused") {
    CHECK_THROWS_AS(parse_type_space(replace(kTwoByTwo, R"("1/3", "2/3")", R"(0.5, "1/2")")), ParseError);
  }
  SUBCASE("syntax errors carry line and column") {
    try {
      parse_type_space("{\n  \"states\": [\"a\",\n  ]\n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() >= 3);
    }
  }
  SUBCASE("partition problems") {
    CHECK_THROWS_AS(parse_type_space(replace(kTwoByTwo, R"([["a", "b"], ["c", "d"]])", R"([["a", "b"], ["c"]])")),
                    ParseError);
    CHECK_THROWS_AS(parse_type_space(replace(kTwoByTwo, R"([["a", "b"], ["c", "d"]])", R"([["a", "b"], ["b", "c", "d"]])")),
                    ParseError);
    CHECK_THROWS_AS(parse_type_space(replace(kTwoByTwo, R"("c": ["0", "0", "1/3", "2/3"])", R"("e": ["0", "0", "1/3", "2/3"])")),
                    ParseError);
  }
  SUBCASE("a cell without any row") {
    CHECK_THROWS_AS(parse_type_space(replace(kTwoByTwo, R"(, "c": ["0", "0", "1/3", "2/3"])", "")), ParseError);
  }
  SUBCASE("unknown keys") {
    CHECK_THROWS_AS(parse_type_space(replace(kTwoByTwo, R"("name": "1")", R"("name": "1", "prior": [])")), ParseError);
  }
  SUBCASE("state limit") {
    ParseOptions small;
    small.max_states = 3;
    CHECK_THROWS_AS(parse_type_space(kTwoByTwo, small), ParseError);
  }
}

TEST_CASE("structural construction errors") {
  CHECK_THROWS_AS(TypeSpace({}, {}), StructureError);
  CHECK_THROWS_AS(TypeSpace({"a", "a"}, {PlayerSpec{"p", {{0, 1}}, {q("1/2,1/2"), q("1/2,1/2")}}}), StructureError);
  CHECK_THROWS_AS(TypeSpace({"a", "b"}, {PlayerSpec{"p", {{0, 1}}, {q("1/2,1/2")}}}), StructureError);
  CHECK_THROWS_AS(TypeSpace({"a", "b"}, {PlayerSpec{"p", {{0}}, {q("1,0"), q("0,1")}}}), StructureError);
}

TEST_CASE("ProbVector checks its invariant") {
  CHECK_NOTHROW(ProbVector(q("1/10,0,9/10")));
  CHECK_THROWS_AS(ProbVector(q("1/2,1/3")), StructureError);
  CHECK_THROWS_AS(ProbVector(q("3/2,-1/2")), StructureError);
  CHECK_FALSE(ProbVector::try_make(q("1/2,1/3")).has_value());
  const ProbVector p(q("1/10,0,9/10"));
  CHECK(p.mass(EventSet(0b101)) == Rational(1));
  CHECK(p.support() == EventSet(0b101));
}

TEST_CASE("induced subspace on two point-mass components") {
  const auto ts = load_fixture("ex_pl1");
  const auto sub = induced_subspace(ts, EventSet(0b1001));
  CHECK(sub.state_labels() == std::vector<std::string>{"w1", "w4"});
  CHECK(validate(sub).empty());
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(sub.belief(i, 0) == q("1,0"));
    CHECK(sub.belief(i, 1) == q("0,1"));
  }
  CHECK_THROWS_AS(induced_subspace(ts, EventSet(0b0110)), PreconditionError);
  CHECK_THROWS_AS(induced_subspace(ts, EventSet()), PreconditionError);
}

TEST_CASE("induced subspace of the whole space is the space") {
  const auto ts = load_fixture("ex_pl2");
  CHECK(induced_subspace(ts, ts.all_states()) == ts);
}

TEST_CASE("induced subspace of the shared-partition space on {w3, w4}") {
  const auto sub = induced_subspace(load_fixture("pl4"), EventSet(0b1100));
  CHECK(sub.num_states() == 2);
  CHECK(sub.belief(0, 0) == q("1/2,1/2"));
  CHECK(sub.belief(0, 1) == q("1/2,1/2"));
  CHECK(sub.belief(1, 0) == q("1,0"));
  CHECK(sub.belief(1, 1) == q("1,0"));
  CHECK(validate(sub).empty());
}

TEST_CASE("induced subspace restricted to a player subset") {
  const auto ts = load_fixture("ex_pl1");
  // Anne alone: {w2, w3} is closed under her beliefs.
  const auto sub = induced_subspace(ts, EventSet(0b0110), PlayerSet::single(0));
  CHECK(sub.num_players() == 1);
  CHECK(sub.player_name(0) == "Anne");
  CHECK(sub.belief(0, 0) == q("1/2,1/2"));
}

TEST_CASE("random spaces: serialization round-trips bit-exactly") {
  testing_support::SpaceGenerator gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ts = gen.next();
    REQUIRE(validate(ts).empty());
    const std::string text = serialize_type_space(ts);
    const auto back = parse_type_space(text);
    CHECK(back == ts);
    CHECK(serialize_type_space(back) == text);
  }
}

TEST_CASE("serialization keeps rows that break measurability") {
  const auto ts = parse_type_space(replace(kTwoByTwo, R"("c": ["0", "0", "1/3", "2/3"])",
                                           R"("c": ["0", "0", "1/3", "2/3"], "d": ["0", "0", "2/3", "1/3"])"));
  CHECK(parse_type_space(serialize_type_space(ts)) == ts);
}

TEST_CASE("random spaces: every closed set induces a valid space") {
  testing_support::SpaceGenerator gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ts = gen.next();
    const std::size_t n = ts.num_states();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const EventSet s(bits);
      if (!is_closed(ts, ts.all_players(), s)) continue;
      const auto sub = induced_subspace(ts, s);
      CHECK(validate(sub).empty());
      CHECK(sub.num_states() == s.count());
    }
  }
}

TEST_CASE("random spaces: rows are constant on cells") {
  testing_support::SpaceGenerator gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ts = gen.next();
    for (std::size_t i = 0; i < ts.num_players(); ++i) {
      for (const auto& cell : ts.cells(i)) {
        for (auto w : cell.indices()) CHECK(ts.belief(i, w) == ts.belief(i, cell.first()));
      }
    }
  }
}
