#include "tsaudit/type_space.hpp"

#include <cstdlib>
#include <set>

#include "tsaudit/errors.hpp"

namespace tsaudit {

std::size_t state_soft_limit() {
  const char* env = std::getenv("TSAUDIT_MAX_STATES");
  if (env == nullptr || *env == '\0') return kMaxStatesDefault;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) return kMaxStatesDefault;
  return v;
}

IndexSet IndexSet::of(const std::vector<std::size_t>& indices) {
  IndexSet s;
  for (auto i : indices) {
    if (i >= 64) throw StructureError("index " + std::to_string(i) + " exceeds set capacity");
    s.insert(i);
  }
  return s;
}

std::vector<std::size_t> IndexSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::optional<ProbVector> ProbVector::try_make(RationalVector values) {
  Rational total;
  for (const auto& v : values) {
    if (v.sign() < 0) return std::nullopt;
    total += v;
  }
  if (total != Rational(1)) return std::nullopt;
  return ProbVector(std::move(values));
}

ProbVector::ProbVector(RationalVector values) : values_(std::move(values)) {
  Rational total;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k].sign() < 0) {
      throw StructureError("probability entry " + std::to_string(k) + " is negative (" +
                           values_[k].str() + ")");
    }
    total += values_[k];
  }
  if (total != Rational(1)) {
    throw StructureError("probability entries sum to " + total.str() + ", not 1");
  }
}

Rational ProbVector::mass(EventSet e) const {
  Rational total;
  for (auto k : e.indices()) {
    if (k < values_.size()) total += values_[k];
  }
  return total;
}

EventSet ProbVector::support() const {
  EventSet s;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k].sign() > 0) s.insert(k);
  }
  return s;
}

TypeSpace::TypeSpace(std::vector<std::string> states, std::vector<PlayerSpec> players)
    : states_(std::move(states)) {
  const std::size_t n = states_.size();
  if (n == 0) throw StructureError("type space has no states");
  if (n > kMaxStatesHard) {
    throw StructureError("type space has " + std::to_string(n) + " states; at most " +
                         std::to_string(kMaxStatesHard) + " are supported");
  }
  if (players.empty()) throw StructureError("type space has no players");
  if (players.size() > 64) throw StructureError("at most 64 players are supported");
  std::set<std::string> seen;
  for (const auto& s : states_) {
    if (!seen.insert(s).second) throw StructureError("duplicate state label \"" + s + "\"");
  }
  seen.clear();
  for (auto& spec : players) {
    if (!seen.insert(spec.name).second) {
      throw StructureError("duplicate player name \"" + spec.name + "\"");
    }
    Player p;
    p.name = std::move(spec.name);
    p.cell_of.assign(n, n);
    for (const auto& cell : spec.partition) {
      if (cell.empty()) throw StructureError("player \"" + p.name + "\" has an empty cell");
      EventSet c;
      for (auto w : cell) {
        if (w >= n) throw StructureError("player \"" + p.name + "\" partition names an unknown state");
        if (p.cell_of[w] != n) {
          throw StructureError("player \"" + p.name + "\" partition lists state \"" + states_[w] +
                               "\" more than once");
        }
        p.cell_of[w] = p.cells.size();
        c.insert(w);
      }
      p.cells.push_back(c);
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (p.cell_of[w] == n) {
        throw StructureError("player \"" + p.name + "\" partition misses state \"" + states_[w] + "\"");
      }
    }
    if (spec.beliefs.size() != n) {
      throw StructureError("player \"" + p.name + "\" has " + std::to_string(spec.beliefs.size()) +
                           " belief rows for " + std::to_string(n) + " states");
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (spec.beliefs[w].size() != n) {
        throw StructureError("player \"" + p.name + "\" belief row at \"" + states_[w] + "\" has " +
                             std::to_string(spec.beliefs[w].size()) + " entries for " +
                             std::to_string(n) + " states");
      }
      EventSet sup;
      for (std::size_t k = 0; k < n; ++k) {
        if (spec.beliefs[w][k].sign() > 0) sup.insert(k);
      }
      p.supports.push_back(sup);
    }
    p.beliefs = std::move(spec.beliefs);
    players_.push_back(std::move(p));
  }
}

std::optional<std::size_t> TypeSpace::state_index(const std::string& label) const {
  for (std::size_t w = 0; w < states_.size(); ++w) {
    if (states_[w] == label) return w;
  }
  return std::nullopt;
}

std::optional<std::size_t> TypeSpace::player_index(const std::string& name) const {
  for (std::size_t i = 0; i < players_.size(); ++i) {
    if (players_[i].name == name) return i;
  }
  return std::nullopt;
}

Rational TypeSpace::belief_of(std::size_t i, std::size_t w, EventSet e) const {
  Rational total;
  const auto& row = belief(i, w);
  for (auto k : e.indices()) total += row[k];
  return total;
}

std::vector<std::string> TypeSpace::labels_of(EventSet e) const {
  std::vector<std::string> out;
  for (auto k : e.indices()) out.push_back(states_[k]);
  return out;
}

bool operator==(const TypeSpace& a, const TypeSpace& b) {
  if (a.states_ != b.states_ || a.players_.size() != b.players_.size()) return false;
  for (std::size_t i = 0; i < a.players_.size(); ++i) {
    const auto& p = a.players_[i];
    const auto& q = b.players_[i];
    if (p.name != q.name || p.cells != q.cells || p.beliefs != q.beliefs) return false;
  }
  return true;
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Probability:
      return "probability";
    case Axiom::Measurability:
      return "measurability";
    case Axiom::Truth:
      return "truth";
  }
  return "?";
}

std::vector<Violation> validate(const TypeSpace& ts) {
  std::vector<Violation> out;
  const std::size_t n = ts.num_states();
  for (std::size_t i = 0; i < ts.num_players(); ++i) {
    const std::string who = "player \"" + ts.player_name(i) + "\"";
    for (std::size_t w = 0; w < n; ++w) {
      const std::string at = who + " at state \"" + ts.state_label(w) + "\"";
      const auto& row = ts.belief(i, w);
      Rational total;
      for (std::size_t k = 0; k < n; ++k) {
        if (row[k].sign() < 0) {
          out.push_back({Axiom::Probability, i, w,
                         at + ": negative probability " + row[k].str() + " on \"" + ts.state_label(k) + "\""});
        }
        total += row[k];
      }
      if (total != Rational(1)) {
        out.push_back({Axiom::Probability, i, w, at + ": row sum " + total.str() + " != 1"});
      }
      const EventSet cell = ts.cell_of(i, w);
      const std::size_t rep = cell.first();
      if (rep != w && ts.belief(i, rep) != row) {
        out.push_back({Axiom::Measurability, i, w,
                       at + ": belief row differs from the row at \"" + ts.state_label(rep) +
                           "\" in the same cell"});
      }
      const EventSet outside = ts.support(i, w) - cell;
      if (!outside.empty()) {
        out.push_back({Axiom::Truth, i, w,
                       at + ": positive belief on \"" + ts.state_label(outside.first()) +
                           "\" outside the player's own cell"});
      }
    }
  }
  return out;
}

void require_valid(const TypeSpace& ts) {
  const auto v = validate(ts);
  if (!v.empty()) throw StructureError("invalid type space: " + v.front().message);
}

bool is_closed(const TypeSpace& ts, PlayerSet players, EventSet s) {
  for (auto w : s.indices()) {
    for (auto i : players.indices()) {
      if (!ts.support(i, w).subset_of(s)) return false;
    }
  }
  return true;
}

TypeSpace induced_subspace(const TypeSpace& ts, EventSet s) {
  return induced_subspace(ts, s, ts.all_players());
}

TypeSpace induced_subspace(const TypeSpace& ts, EventSet s, PlayerSet players) {
  if (s.empty()) throw PreconditionError("induced subspace of an empty set");
  if (!s.subset_of(ts.all_states())) throw PreconditionError("set contains unknown states");
  if (players.empty() || !players.subset_of(ts.all_players())) {
    throw PreconditionError("induced subspace needs a nonempty set of known players");
  }
  if (!is_closed(ts, players, s)) {
    throw PreconditionError("set is not closed under the players' beliefs");
  }
  const auto members = s.indices();
  std::vector<std::size_t> position(ts.num_states(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) position[members[k]] = k;

  std::vector<std::string> labels;
  for (auto w : members) labels.push_back(ts.state_label(w));
  std::vector<PlayerSpec> specs;
  for (auto i : players.indices()) {
    PlayerSpec spec;
    spec.name = ts.player_name(i);
    for (const auto& cell : ts.cells(i)) {
      const EventSet kept = cell & s;
      if (kept.empty()) continue;
      std::vector<std::size_t> c;
      for (auto w : kept.indices()) c.push_back(position[w]);
      spec.partition.push_back(std::move(c));
    }
    for (auto w : members) {
      RationalVector row;
      row.reserve(members.size());
      for (auto k : members) row.push_back(ts.belief(i, w)[k]);
      spec.beliefs.push_back(std::move(row));
    }
    specs.push_back(std::move(spec));
  }
  return TypeSpace(std::move(labels), std::move(specs));
}

RationalVector zero_extend(const RationalVector& on_s, EventSet s, std::size_t num_states) {
  const auto members = s.indices();
  if (members.size() != on_s.size()) throw StructureError("zero_extend: length does not match the set");
  RationalVector out(num_states);
  for (std::size_t k = 0; k < members.size(); ++k) out[members[k]] = on_s[k];
  return out;
}

Rational expectation(const RationalVector& p, const RationalVector& f) { return dot(p, f); }

}  // namespace tsaudit
