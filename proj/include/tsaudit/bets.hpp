#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsaudit/components.hpp"
#include "tsaudit/type_space.hpp"

namespace tsaudit {

/// Per-state payoffs for a set of players. A bet additionally sums to zero
/// at every state; a semi-bet need not.
struct PayoffFamily {
  std::vector<std::size_t> players;       // increasing player indices
  std::vector<RationalVector> payoffs;    // parallel to players

  PlayerSet player_set() const { return PlayerSet::of(players); }
  /// Sum over players of the payoff at each state.
  RationalVector pointwise_sum() const;
};

using Bet = PayoffFamily;
using SemiBet = PayoffFamily;

/// Builds a family from player-name keyed payoffs; StructureError on unknown
/// names or wrong lengths.
PayoffFamily make_family(const TypeSpace& ts, const std::map<std::string, RationalVector>& by_name);

/// Adds zero payoffs for every listed player missing from `family`.
PayoffFamily with_players(const PayoffFamily& family, PlayerSet players, std::size_t num_states);

enum class BetKind { Agreeable, WeaklyAgreeable, Acceptable, SemiBetOnly, Invalid };

const char* bet_kind_name(BetKind k);

struct BetVerdict {
  BetKind kind = BetKind::Invalid;
  bool zero_sum = false;
  bool semi_bet = false;
  bool agreeable = false;
  bool weakly_agreeable = false;
  bool acceptable = false;
  /// expectations[k][w]: expectation of the k-th listed player at w.
  std::vector<RationalVector> expectations;
  /// Agreeable: smallest expectation. WeaklyAgreeable: smallest expectation on
  /// the certifying component. Acceptable: largest strict gain. Else 0.
  Rational margin;
  /// Minimal component on which every listed player strictly gains.
  std::optional<EventSet> certifying_component;
  /// (player index, state) pairs with a strictly positive expectation.
  std::vector<std::pair<std::size_t, std::size_t>> strict_locus;
};

/// Exact classification. Kinds are checked from the strongest down; each
/// stronger kind also satisfies the weaker predicates.
BetVerdict verify_bet(const TypeSpace& ts, const PayoffFamily& bet);

/// At every state, the states where no listed player expects a loss are
/// commonly certain among the listed players.
bool verify_semi_bet(const TypeSpace& ts, const PayoffFamily& family);

/// Independent agreeability test: some alpha > 0 whose locus
/// {w : every expectation >= alpha} is commonly certain at every state.
bool is_agreeable_via_locus(const TypeSpace& ts, const Bet& bet);

struct BetSearch {
  Bet bet;
  /// Optimum of the search LP: the guaranteed margin for agreeable search,
  /// the total expectation for acceptable search.
  Rational objective;
  /// For weakly agreeable search: the players and component it was built on.
  PlayerSet players;
  std::optional<EventSet> component;
};

/// Agreeable bet among `players` (all by default) with payoffs in [-1, 1],
/// or nullopt when they share a common prior. InternalError if the answer
/// disagrees with the common-prior LP.
std::optional<BetSearch> find_agreeable_bet(const TypeSpace& ts);
std::optional<BetSearch> find_agreeable_bet(const TypeSpace& ts, PlayerSet players);

/// Weakly agreeable bet, built on a minimal component whose induced space
/// has no common prior and zero outside it; nullopt iff universally
/// consistent. Tries all players first, then smaller player sets.
std::optional<BetSearch> find_weakly_agreeable_bet(const TypeSpace& ts);

/// Acceptable bet among all players, or nullopt when some common prior is
/// positive on every cell. InternalError if this disagrees with the
/// positive-cell LP.
std::optional<BetSearch> find_acceptable_bet(const TypeSpace& ts);

/// Every player set with at least two members, all players first, then by
/// decreasing size and increasing bits.
std::vector<PlayerSet> coalitions(std::size_t num_players);

}  // namespace tsaudit
