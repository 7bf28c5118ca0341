#pragma once

#include <optional>
#include <vector>

#include "tsaudit/bets.hpp"
#include "tsaudit/type_space.hpp"

namespace tsaudit {

enum class Level { None, Consistent, UniversallyConsistent, StronglyConsistent };

const char* level_name(Level l);

struct ConsistencyResult {
  bool consistent = false;
  /// Basic optimal solution of the common-prior LP.
  std::optional<ProbVector> witness;
  /// Set when uniqueness was requested: true iff the common priors form a
  /// single point.
  std::optional<bool> unique;
  /// When inconsistent.
  std::optional<BetSearch> agreeable_bet;
};

struct ComponentWitness {
  PlayerSet players;
  EventSet component;
  /// Common prior of `players` on the induced space, extended by zero.
  ProbVector witness;
};

struct UniversalResult {
  bool universally_consistent = false;
  /// One entry per (player set, minimal component) when consistent.
  std::vector<ComponentWitness> witnesses;
  /// When not: the weakly agreeable bet and the failing set/component.
  std::optional<BetSearch> weakly_agreeable_bet;
};

struct StrongResult {
  bool strongly_consistent = false;
  /// Common prior maximizing the smallest cell probability.
  std::optional<ProbVector> witness;
  /// That smallest cell probability (0 when no common prior exists).
  Rational min_cell_mass;
  std::optional<BetSearch> acceptable_bet;
};

struct CheckOptions {
  /// Decide uniqueness of the common prior with 2n extra LPs.
  bool uniqueness = true;
};

ConsistencyResult check_consistent(const TypeSpace& ts, const CheckOptions& options = {});

/// Every player set with at least two members and every minimal component
/// for that set must carry a common prior of its induced space.
UniversalResult check_universally_consistent(const TypeSpace& ts);

StrongResult check_strongly_consistent(const TypeSpace& ts);

struct ConsistencyVerdict {
  Level level = Level::None;
  ConsistencyResult consistency;
  UniversalResult universal;
  StrongResult strong;
  /// Certificate that the next level up fails: agreeable bet (None),
  /// weakly agreeable bet (Consistent), acceptable bet (Universally).
  std::optional<BetSearch> refuting_bet;
};

/// Runs all three checks; InternalError when they violate the hierarchy.
ConsistencyVerdict classify(const TypeSpace& ts, const CheckOptions& options = {});

/// Vertices of the set of common priors (empty when inconsistent), by exact
/// support enumeration. PreconditionError above 16 states.
std::vector<ProbVector> witness_vertices(const TypeSpace& ts);

/// Is p a common prior, i.e. for every player a mixture of that player's
/// beliefs? Decided per player by the disintegrability LP.
bool is_common_prior(const TypeSpace& ts, const ProbVector& p, PlayerSet players);

}  // namespace tsaudit
