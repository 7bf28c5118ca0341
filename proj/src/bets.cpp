#include "tsaudit/bets.hpp"

#include <algorithm>

#include "belief_lp.hpp"
#include "tsaudit/errors.hpp"

namespace tsaudit {

RationalVector PayoffFamily::pointwise_sum() const {
  RationalVector out(payoffs.empty() ? 0 : payoffs.front().size());
  for (const auto& f : payoffs) {
    for (std::size_t w = 0; w < out.size() && w < f.size(); ++w) out[w] += f[w];
  }
  return out;
}

PayoffFamily make_family(const TypeSpace& ts, const std::map<std::string, RationalVector>& by_name) {
  std::vector<std::pair<std::size_t, RationalVector>> entries;
  for (const auto& [name, payoff] : by_name) {
    const auto i = ts.player_index(name);
    if (!i) throw StructureError("unknown player \"" + name + "\"");
    if (payoff.size() != ts.num_states()) {
      throw StructureError("payoff of \"" + name + "\" has " + std::to_string(payoff.size()) +
                           " entries for " + std::to_string(ts.num_states()) + " states");
    }
    entries.emplace_back(*i, payoff);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  PayoffFamily family;
  for (auto& [i, f] : entries) {
    family.players.push_back(i);
    family.payoffs.push_back(std::move(f));
  }
  return family;
}

PayoffFamily with_players(const PayoffFamily& family, PlayerSet players, std::size_t num_states) {
  PayoffFamily out;
  const PlayerSet all = players | family.player_set();
  for (auto i : all.indices()) {
    out.players.push_back(i);
    const auto it = std::find(family.players.begin(), family.players.end(), i);
    if (it == family.players.end()) {
      out.payoffs.emplace_back(num_states);
    } else {
      out.payoffs.push_back(family.payoffs[static_cast<std::size_t>(it - family.players.begin())]);
    }
  }
  return out;
}

const char* bet_kind_name(BetKind k) {
  switch (k) {
    case BetKind::Agreeable:
      return "Agreeable";
    case BetKind::WeaklyAgreeable:
      return "WeaklyAgreeable";
    case BetKind::Acceptable:
      return "Acceptable";
    case BetKind::SemiBetOnly:
      return "SemiBetOnly";
    case BetKind::Invalid:
      return "Invalid";
  }
  return "?";
}

namespace {

void check_family(const TypeSpace& ts, const PayoffFamily& family) {
  if (family.players.empty()) throw StructureError("payoff family lists no players");
  if (family.players.size() != family.payoffs.size()) {
    throw StructureError("payoff family has mismatched player and payoff lists");
  }
  for (std::size_t k = 0; k < family.players.size(); ++k) {
    if (family.players[k] >= ts.num_players()) throw StructureError("payoff family names an unknown player");
    if (k > 0 && family.players[k] <= family.players[k - 1]) {
      throw StructureError("payoff family players must be distinct and increasing");
    }
    if (family.payoffs[k].size() != ts.num_states()) {
      throw StructureError("payoff of player \"" + ts.player_name(family.players[k]) + "\" has " +
                           std::to_string(family.payoffs[k].size()) + " entries for " +
                           std::to_string(ts.num_states()) + " states");
    }
  }
}

std::vector<RationalVector> family_expectations(const TypeSpace& ts, const PayoffFamily& family) {
  std::vector<RationalVector> out;
  for (std::size_t k = 0; k < family.players.size(); ++k) {
    RationalVector e(ts.num_states());
    for (std::size_t w = 0; w < ts.num_states(); ++w) {
      e[w] = dot(ts.belief(family.players[k], w), family.payoffs[k]);
    }
    out.push_back(std::move(e));
  }
  return out;
}

// States where every listed player's expectation is at least `alpha`.
EventSet locus_at_least(const std::vector<RationalVector>& exp, std::size_t n, const Rational& alpha) {
  EventSet out;
  for (std::size_t w = 0; w < n; ++w) {
    bool ok = true;
    for (const auto& e : exp) ok = ok && e[w] >= alpha;
    if (ok) out.insert(w);
  }
  return out;
}

bool locus_certain_everywhere(const ComponentReport& report, EventSet locus) {
  for (std::size_t w = 0; w < report.closure.size(); ++w) {
    if (!commonly_certain_at(report, locus, w)) return false;
  }
  return true;
}

Bet bet_from_solution(const detail::BetLayout& layout, const RationalVector& x) {
  Bet bet;
  bet.players = layout.players;
  for (std::size_t k = 0; k < layout.players.size(); ++k) {
    RationalVector f(layout.num_states);
    for (std::size_t w = 0; w < layout.num_states; ++w) f[w] = x[layout.var(k, w)];
    bet.payoffs.push_back(std::move(f));
  }
  return bet;
}

}  // namespace

BetVerdict verify_bet(const TypeSpace& ts, const PayoffFamily& bet) {
  check_family(ts, bet);
  const std::size_t n = ts.num_states();
  BetVerdict v;
  v.expectations = family_expectations(ts, bet);
  v.zero_sum = true;
  for (const auto& s : bet.pointwise_sum()) v.zero_sum = v.zero_sum && s.is_zero();

  const auto report = minimal_components(ts, bet.player_set());
  v.semi_bet = locus_certain_everywhere(report, locus_at_least(v.expectations, n, Rational(0)));

  Rational min_all;
  Rational max_all;
  bool first = true;
  for (std::size_t k = 0; k < bet.players.size(); ++k) {
    for (std::size_t w = 0; w < n; ++w) {
      const Rational& e = v.expectations[k][w];
      if (first || e < min_all) min_all = e;
      if (first || e > max_all) max_all = e;
      first = false;
      if (e.sign() > 0) v.strict_locus.emplace_back(bet.players[k], w);
    }
  }

  v.agreeable = v.zero_sum && min_all.sign() > 0;
  v.acceptable = v.zero_sum && v.semi_bet && max_all.sign() > 0;
  if (v.zero_sum && v.semi_bet) {
    std::optional<Rational> best;
    for (const EventSet s : report.minimal) {
      std::optional<Rational> lo;
      for (const auto& e : v.expectations) {
        for (auto w : s.indices()) {
          if (!lo || e[w] < *lo) lo = e[w];
        }
      }
      if (lo->sign() > 0 && (!best || *lo > *best)) {
        best = lo;
        v.certifying_component = s;
      }
    }
    v.weakly_agreeable = best.has_value();
    if (best) v.margin = *best;
  }

  if (v.agreeable) {
    v.kind = BetKind::Agreeable;
    v.margin = min_all;
  } else if (v.weakly_agreeable) {
    v.kind = BetKind::WeaklyAgreeable;
  } else if (v.acceptable) {
    v.kind = BetKind::Acceptable;
    v.margin = max_all;
  } else if (v.semi_bet) {
    v.kind = BetKind::SemiBetOnly;
  } else {
    v.kind = BetKind::Invalid;
  }
  return v;
}

bool verify_semi_bet(const TypeSpace& ts, const PayoffFamily& family) {
  check_family(ts, family);
  const auto exp = family_expectations(ts, family);
  const auto report = minimal_components(ts, family.player_set());
  return locus_certain_everywhere(report, locus_at_least(exp, ts.num_states(), Rational(0)));
}

bool is_agreeable_via_locus(const TypeSpace& ts, const Bet& bet) {
  check_family(ts, bet);
  for (const auto& s : bet.pointwise_sum()) {
    if (!s.is_zero()) return false;
  }
  const auto exp = family_expectations(ts, bet);
  const auto report = minimal_components(ts, bet.player_set());
  // Only the attained positive values matter as thresholds.
  std::vector<Rational> candidates;
  for (const auto& e : exp) {
    for (const auto& x : e) {
      if (x.sign() > 0) candidates.push_back(x);
    }
  }
  for (const auto& alpha : candidates) {
    if (locus_certain_everywhere(report, locus_at_least(exp, ts.num_states(), alpha))) return true;
  }
  return false;
}

std::vector<PlayerSet> coalitions(std::size_t num_players) {
  std::vector<PlayerSet> out;
  if (num_players < 2) return out;
  if (num_players > 20) throw PreconditionError("coalition enumeration is limited to 20 players");
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << num_players); ++bits) {
    if (std::popcount(bits) >= 2) out.emplace_back(bits);
  }
  std::stable_sort(out.begin(), out.end(), [](PlayerSet a, PlayerSet b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a.bits() < b.bits();
  });
  return out;
}

std::optional<BetSearch> find_agreeable_bet(const TypeSpace& ts) {
  return find_agreeable_bet(ts, ts.all_players());
}

std::optional<BetSearch> find_agreeable_bet(const TypeSpace& ts, PlayerSet players) {
  const auto layout = detail::layout_for(ts, players);
  const auto lp = detail::agreeable_bet_lp(ts, layout);
  const auto out = detail::solve_verified(lp, "agreeable-bet search");
  if (!out.optimal()) throw InternalError("agreeable-bet search LP is not optimal");
  const Rational alpha = out.as_optimal().value;

  const auto prior = detail::solve_verified(detail::common_prior_lp(ts, players), "common-prior check");
  const bool consistent = prior.optimal();
  if (consistent == (alpha.sign() > 0)) {
    throw InternalError("agreeable-bet search and common-prior LP disagree");
  }
  if (alpha.sign() <= 0) return std::nullopt;

  BetSearch result{bet_from_solution(layout, out.as_optimal().x), alpha, players, std::nullopt};
  const auto v = verify_bet(ts, result.bet);
  if (!v.agreeable || v.margin < alpha) throw InternalError("agreeable-bet search produced a non-agreeable bet");
  return result;
}

std::optional<BetSearch> find_weakly_agreeable_bet(const TypeSpace& ts) {
  const std::size_t n = ts.num_states();
  for (const PlayerSet players : coalitions(ts.num_players())) {
    const auto report = minimal_components(ts, players);
    for (const EventSet s : report.minimal) {
      const TypeSpace sub = induced_subspace(ts, s, players);
      auto local = find_agreeable_bet(sub);
      if (!local) continue;
      // Subspace player k is the k-th member of `players`; payoffs vanish
      // off the component.
      Bet bet;
      bet.players = players.indices();
      for (const auto& f : local->bet.payoffs) bet.payoffs.push_back(zero_extend(f, s, n));
      const auto v = verify_bet(ts, bet);
      if (!v.weakly_agreeable) throw InternalError("zero-extended component bet is not weakly agreeable");
      return BetSearch{std::move(bet), local->objective, players, s};
    }
  }
  return std::nullopt;
}

std::optional<BetSearch> find_acceptable_bet(const TypeSpace& ts) {
  const PlayerSet players = ts.all_players();
  const auto layout = detail::layout_for(ts, players);
  const auto lp = detail::acceptable_bet_lp(ts, layout);
  const auto out = detail::solve_verified(lp, "acceptable-bet search");
  if (!out.optimal()) throw InternalError("acceptable-bet search LP is not optimal");
  const Rational total = out.as_optimal().value;

  const auto strong = detail::solve_verified(detail::strong_prior_lp(ts, players), "positive-cell prior check");
  const bool strongly_consistent = strong.optimal() && strong.as_optimal().value.sign() > 0;
  if (strongly_consistent == (total.sign() > 0)) {
    throw InternalError("acceptable-bet search and positive-cell prior LP disagree");
  }
  if (total.sign() <= 0) return std::nullopt;

  BetSearch result{bet_from_solution(layout, out.as_optimal().x), total, players, std::nullopt};
  if (!verify_bet(ts, result.bet).acceptable) {
    throw InternalError("acceptable-bet search produced a non-acceptable bet");
  }
  return result;
}

}  // namespace tsaudit
