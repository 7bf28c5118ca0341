#include "tsaudit/components.hpp"

#include <algorithm>

#include "tsaudit/errors.hpp"

namespace tsaudit {

namespace {

struct Tarjan {
  const std::vector<EventSet>& succ;
  std::vector<int> index;
  std::vector<int> low;
  std::vector<bool> on_stack;
  std::vector<std::size_t> stack;
  std::vector<EventSet> sccs;
  int counter = 0;

  explicit Tarjan(const std::vector<EventSet>& s)
      : succ(s), index(s.size(), -1), low(s.size(), 0), on_stack(s.size(), false) {}

  void visit(std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : succ[v].indices()) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      EventSet scc;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        scc.insert(w);
      } while (w != v);
      sccs.push_back(scc);
    }
  }
};

}  // namespace

ReachabilityGraph build_graph(const TypeSpace& ts, PlayerSet players) {
  if (players.empty()) throw StructureError("reachability graph needs at least one player");
  if (!players.subset_of(ts.all_players())) throw StructureError("unknown player in player set");
  ReachabilityGraph g;
  g.players = players;
  g.successors.assign(ts.num_states(), EventSet{});
  for (std::size_t w = 0; w < ts.num_states(); ++w) {
    for (auto i : players.indices()) g.successors[w] = g.successors[w] | ts.support(i, w);
  }
  return g;
}

bool is_component(const TypeSpace& ts, PlayerSet players, EventSet s) {
  if (s.empty()) throw PreconditionError("component candidate is empty");
  const auto g = build_graph(ts, players);
  for (auto w : s.indices()) {
    if (!g.successors[w].subset_of(s)) return false;
  }
  return true;
}

ComponentReport minimal_components(const TypeSpace& ts, PlayerSet players) {
  const auto g = build_graph(ts, players);
  const std::size_t n = ts.num_states();
  ComponentReport report;
  report.players = players;

  Tarjan tarjan(g.successors);
  for (std::size_t v = 0; v < n; ++v) {
    if (tarjan.index[v] < 0) tarjan.visit(v);
  }
  for (const auto& scc : tarjan.sccs) {
    EventSet out;
    for (auto w : scc.indices()) out = out | g.successors[w];
    if (out.subset_of(scc)) report.minimal.push_back(scc);
  }
  std::sort(report.minimal.begin(), report.minimal.end(),
            [](EventSet a, EventSet b) { return a.first() < b.first(); });

  report.closure.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    EventSet seen = EventSet::single(w);
    EventSet frontier = seen;
    while (!frontier.empty()) {
      EventSet next;
      for (auto v : frontier.indices()) next = next | g.successors[v];
      frontier = next - seen;
      seen = seen | next;
    }
    report.closure[w] = seen;
  }
  return report;
}

bool commonly_certain_at(const TypeSpace& ts, PlayerSet players, EventSet e, std::size_t w) {
  return commonly_certain_at(minimal_components(ts, players), e, w);
}

bool commonly_certain_at(const ComponentReport& report, EventSet e, std::size_t w) {
  return report.closure.at(w).subset_of(e);
}

EventSet commonly_certain_locus(const ComponentReport& report, EventSet e) {
  EventSet out;
  for (std::size_t w = 0; w < report.closure.size(); ++w) {
    if (report.closure[w].subset_of(e)) out.insert(w);
  }
  return out;
}

}  // namespace tsaudit
