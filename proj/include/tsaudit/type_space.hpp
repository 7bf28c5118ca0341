#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsaudit/rational.hpp"

namespace tsaudit {

/// Hard ceiling imposed by the 64-bit set representation.
inline constexpr std::size_t kMaxStatesHard = 64;
/// Default soft ceiling; exponential event enumerations start to hurt past it.
inline constexpr std::size_t kMaxStatesDefault = 24;

/// Soft limit in effect: TSAUDIT_MAX_STATES when set to a positive integer,
/// otherwise kMaxStatesDefault.
std::size_t state_soft_limit();

/// Subset of {0, ..., 63}; used for sets of states and sets of players.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet full(std::size_t n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr IndexSet single(std::size_t i) { return IndexSet(std::uint64_t{1} << i); }
  static IndexSet of(const std::vector<std::size_t>& indices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }
  void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  /// Members in increasing order.
  std::vector<std::size_t> indices() const;
  /// Smallest member; precondition: nonempty.
  std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

using EventSet = IndexSet;
using PlayerSet = IndexSet;

/// Nonnegative rational vector summing to exactly one.
class ProbVector {
 public:
  /// Throws StructureError naming the offending entry or the sum.
  explicit ProbVector(RationalVector values);

  /// Nullopt instead of throwing.
  static std::optional<ProbVector> try_make(RationalVector values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t k) const { return values_[k]; }
  const RationalVector& values() const { return values_; }
  Rational mass(EventSet e) const;
  EventSet support() const;

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  RationalVector values_;
};

/// One player's declared information: a partition of state indices and one
/// belief row per state.
struct PlayerSpec {
  std::string name;
  std::vector<std::vector<std::size_t>> partition;
  std::vector<RationalVector> beliefs;
};

/// Finite type space. Construction checks structure only (labels unique,
/// partitions cover every state exactly once, matrix shapes); the
/// probability, measurability and truth axioms are reported by validate().
class TypeSpace {
 public:
  TypeSpace(std::vector<std::string> states, std::vector<PlayerSpec> players);

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_players() const { return players_.size(); }
  EventSet all_states() const { return EventSet::full(num_states()); }
  PlayerSet all_players() const { return PlayerSet::full(num_players()); }

  const std::string& state_label(std::size_t w) const { return states_[w]; }
  const std::vector<std::string>& state_labels() const { return states_; }
  const std::string& player_name(std::size_t i) const { return players_[i].name; }
  std::optional<std::size_t> state_index(const std::string& label) const;
  std::optional<std::size_t> player_index(const std::string& name) const;

  const std::vector<EventSet>& cells(std::size_t i) const { return players_[i].cells; }
  std::size_t cell_index(std::size_t i, std::size_t w) const { return players_[i].cell_of[w]; }
  EventSet cell_of(std::size_t i, std::size_t w) const { return players_[i].cells[cell_index(i, w)]; }

  /// t_i(w, .) as a vector over states.
  const RationalVector& belief(std::size_t i, std::size_t w) const { return players_[i].beliefs[w]; }
  /// t_i(w, E).
  Rational belief_of(std::size_t i, std::size_t w, EventSet e) const;
  /// States carrying positive probability under t_i(w, .).
  EventSet support(std::size_t i, std::size_t w) const { return players_[i].supports[w]; }

  /// Sorted labels of the states in e.
  std::vector<std::string> labels_of(EventSet e) const;

  friend bool operator==(const TypeSpace& a, const TypeSpace& b);

 private:
  struct Player {
    std::string name;
    std::vector<EventSet> cells;
    std::vector<std::size_t> cell_of;
    std::vector<RationalVector> beliefs;
    std::vector<EventSet> supports;
  };

  std::vector<std::string> states_;
  std::vector<Player> players_;
};

enum class Axiom { Probability, Measurability, Truth };

const char* axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  std::size_t player;
  std::size_t state;
  std::string message;  // uses labels
};

/// Empty iff every row is a probability vector, rows are constant on cells,
/// and every row is supported inside its own cell.
std::vector<Violation> validate(const TypeSpace& ts);

/// Throws StructureError listing the first violation when validate is nonempty.
void require_valid(const TypeSpace& ts);

/// Does no player in `players` put positive belief outside S from inside S?
bool is_closed(const TypeSpace& ts, PlayerSet players, EventSet s);

/// Restriction to the states in S and the players in `players` (all players
/// by default). Rows are restricted without renormalization, which is exact
/// because S is closed. Throws PreconditionError when S is empty or not closed.
TypeSpace induced_subspace(const TypeSpace& ts, EventSet s);
TypeSpace induced_subspace(const TypeSpace& ts, EventSet s, PlayerSet players);

/// Maps a vector indexed by the states of S (in increasing order) back to the
/// full state space, filling zeros elsewhere.
RationalVector zero_extend(const RationalVector& on_s, EventSet s, std::size_t num_states);

/// sum_w f(w) * p(w)
Rational expectation(const RationalVector& p, const RationalVector& f);

}  // namespace tsaudit
