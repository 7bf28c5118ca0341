#pragma once

#include <vector>

#include "tsaudit/type_space.hpp"

namespace tsaudit {

/// w -> w' whenever some player of `players` gives w' positive belief at w.
struct ReachabilityGraph {
  PlayerSet players;
  std::vector<EventSet> successors;  // one entry per state
};

/// Throws StructureError for an empty or unknown player set.
ReachabilityGraph build_graph(const TypeSpace& ts, PlayerSet players);

/// S is a common certainty component for `players` iff no edge leaves it.
/// Precondition: S nonempty (PreconditionError otherwise).
bool is_component(const TypeSpace& ts, PlayerSet players, EventSet s);

struct ComponentReport {
  PlayerSet players;
  /// Terminal strongly connected components, ordered by smallest state.
  std::vector<EventSet> minimal;
  /// Per state, the smallest closed set containing it (forward reachability).
  std::vector<EventSet> closure;
};

ComponentReport minimal_components(const TypeSpace& ts, PlayerSet players);

/// Is E commonly certain at w, i.e. closure(w) within E?
bool commonly_certain_at(const TypeSpace& ts, PlayerSet players, EventSet e, std::size_t w);
bool commonly_certain_at(const ComponentReport& report, EventSet e, std::size_t w);

/// States at which E is commonly certain.
EventSet commonly_certain_locus(const ComponentReport& report, EventSet e);

}  // namespace tsaudit
