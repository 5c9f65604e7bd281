// Test helpers and reference oracles. The oracles use formulas different from
// the library's.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sugeq/capacity.hpp"
#include "sugeq/convexity.hpp"
#include "sugeq/equilibrium.hpp"
#include "sugeq/error.hpp"
#include "sugeq/game.hpp"
#include "sugeq/io.hpp"
#include "sugeq/sugeno.hpp"
#include "sugeq/tensor.hpp"

namespace testing {

using namespace sugeq;

inline Rational q(long n, long d = 1) { return Rational(n, d); }

inline Domain dom(std::initializer_list<const char*> labels) {
  std::vector<std::string> v(labels.begin(), labels.end());
  return Domain(std::move(v));
}

inline PointSet set_of(const Domain& d, std::uint32_t mask) {
  return make_set(d.size(), mask);
}

// Captures the error code of a throwing call.
template <class Fn>
std::optional<ErrorCode> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline FiniteCapacity table_capacity(const Domain& d, std::vector<Rational> t) {
  return FiniteCapacity(d, std::move(t));
}

// Sup of {t : psi(mu(f >= t)) >= t} evaluated only at the candidate points
// where the sup can sit: payoff values and finite psi-values of level sets.
inline Rational candidate_sup(const PayoffFunction& f, const CapacityView& mu,
                              const CorrectionMap& psi) {
  std::vector<Rational> candidates(f.values().begin(), f.values().end());
  for (std::size_t x = 0; x < f.domain().size(); ++x) {
    const ExtendedValue e = psi(mu.value(f.at_least(f[x])));
    if (e.is_finite()) candidates.push_back(e.finite());
  }
  std::optional<Rational> best;
  for (const auto& t : candidates) {
    const ExtendedValue level = psi(mu.value(f.at_least(t)));
    if (level >= ExtendedValue(t) && (!best || t > *best)) best = t;
  }
  return *best;
}

// Original Sugeno integral by the subset formula
// max_A min(mu(A), min_{x in A} g(x)).
inline Rational subset_sugeno(const std::vector<Rational>& g,
                              const FiniteCapacity& mu) {
  Rational best(0);
  for (std::uint32_t a = 1; a <= mu.full_mask(); ++a) {
    Rational inner = mu.at(a);
    for (std::size_t x = 0; x < g.size(); ++x) {
      if ((a >> x) & 1u) inner = min(inner, g[x]);
    }
    best = max(best, inner);
  }
  return best;
}

// Tensor product by the subset formula on sections, indexed like the library
// (first factor most significant).
inline std::vector<Rational> reference_tensor(const FiniteCapacity& m1,
                                              const FiniteCapacity& m2) {
  const std::size_t n1 = m1.domain().size(), n2 = m2.domain().size();
  const std::uint64_t total = std::uint64_t{1} << (n1 * n2);
  std::vector<Rational> out;
  out.reserve(total);
  for (std::uint64_t b = 0; b < total; ++b) {
    std::vector<Rational> g(n1);
    for (std::size_t x = 0; x < n1; ++x) {
      std::uint32_t section = 0;
      for (std::size_t y = 0; y < n2; ++y) {
        // point (x, y) has flat index x * n2 + y
        if ((b >> (x * n2 + y)) & 1u) section |= std::uint32_t{1} << y;
      }
      g[x] = m2.at(section);
    }
    out.push_back(subset_sugeno(g, m1));
  }
  return out;
}

// Counts monotone normalized set functions with values in `grid` by trying
// every assignment to the proper nonempty subsets.
inline std::uint64_t brute_capacity_count(std::size_t n,
                                          const std::vector<Rational>& grid) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::size_t free = full > 0 ? full - 1 : 0;
  std::vector<std::size_t> digits(free, 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<Rational> t(full + 1, Rational(0));
    t[full] = Rational(1);
    for (std::size_t k = 0; k < free; ++k) t[k + 1] = grid[digits[k]];
    bool ok = true;
    for (std::uint32_t a = 0; a <= full && ok; ++a) {
      for (std::uint32_t b = 0; b <= full && ok; ++b) {
        if ((a & b) == a && t[a] > t[b]) ok = false;
      }
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < free && ++digits[k] == grid.size()) digits[k++] = 0;
    if (k == free) break;
  }
  return count;
}

// Pure Nash by explicit deviation checks.
inline bool is_pure_nash(const GameSpec& game,
                         const std::vector<std::size_t>& profile) {
  for (std::size_t i = 0; i < game.players(); ++i) {
    for (std::size_t d = 0; d < game.strategies(i).size(); ++d) {
      auto dev = profile;
      dev[i] = d;
      if (game.payoff(i, dev) > game.payoff(i, profile)) return false;
    }
  }
  return true;
}

// Best responses by comparing candidate_sup values directly.
inline std::set<std::size_t> reference_best_response(const GameSpec& game,
                                                     std::size_t player,
                                                     const CapacityView& belief,
                                                     const CorrectionMap& psi) {
  const Domain& opp = game.opponent_domain(player);
  std::vector<Rational> values;
  for (std::size_t x = 0; x < game.strategies(player).size(); ++x) {
    std::vector<Rational> slice;
    for (std::size_t k = 0; k < opp.size(); ++k) {
      slice.push_back(game.payoff(player, game.profile(player, x, k)));
    }
    values.push_back(candidate_sup(PayoffFunction(opp, slice), belief, psi));
  }
  Rational best = values[0];
  for (const auto& v : values) best = max(best, v);
  std::set<std::size_t> out;
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (values[x] == best) out.insert(x);
  }
  return out;
}

inline std::set<std::size_t> members(const PointSet& s) {
  std::set<std::size_t> out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.test(x)) out.insert(x);
  }
  return out;
}

inline GameSpec two_player(std::vector<std::string> rows,
                           std::vector<std::string> cols,
                           std::vector<Rational> p1, std::vector<Rational> p2) {
  return GameSpec({Domain(std::move(rows)), Domain(std::move(cols))},
                  {std::move(p1), std::move(p2)});
}

inline GameSpec coordination() {
  return two_player({"A", "B"}, {"A", "B"}, {q(1), q(0), q(0), q(1)},
                    {q(1), q(0), q(0), q(1)});
}

inline GameSpec matching_pennies() {
  return two_player({"H", "T"}, {"H", "T"}, {q(1), q(-1), q(-1), q(1)},
                    {q(-1), q(1), q(1), q(-1)});
}

// Row player: D strictly dominates U. Column player: R strictly dominates L.
inline GameSpec dominant_game() {
  return two_player({"U", "D"}, {"L", "R"}, {q(0), q(1), q(2), q(3)},
                    {q(0), q(2), q(1), q(3)});
}

// No possibility-support equilibrium exists for this game.
inline GameSpec possibility_gap_game() {
  return two_player({"a0", "a1"}, {"b0", "b1"}, {q(2), q(0), q(0), q(2)},
                    {q(-2), q(1), q(-1), q(-2)});
}

}  // namespace testing
