#pragma once

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sugeq/capacity.hpp"
#include "sugeq/game.hpp"
#include "sugeq/sugeno.hpp"

namespace sugeq {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings; integers are accepted as shorthand.
// With allow_decimal, decimal strings and JSON floats are converted exactly
// from their decimal spelling.
Rational rational_from_json(const Json& value, bool allow_decimal = false);
Json rational_to_json(const Rational& value);

// {"domain": [...], "values": {"<comma-joined sorted labels>": "p/q", ...}}
// with "" for the empty set. Product capacities additionally carry
// "factors": [[...], ...].
FiniteCapacity capacity_from_json(const Json& doc);
Json capacity_to_json(const FiniteCapacity& capacity);
FiniteCapacity parse_capacity(std::string_view text);
FiniteCapacity load_capacity(const std::filesystem::path& path);
// Key of a subset in the capacity format.
std::string subset_key(const Domain& domain, const PointSet& set);

// {"players": n, "strategies": [[...], ...],
//  "payoffs": {"0": nested arrays, ...}} with player indices from 0.
GameSpec game_from_json(const Json& doc, bool allow_decimal = false);
Json game_to_json(const GameSpec& game);
GameSpec parse_game(std::string_view text, bool allow_decimal = false);
GameSpec load_game(const std::filesystem::path& path,
                   bool allow_decimal = false);

// {"domain": [...], "values": {"<label>": "p/q", ...}}
PayoffFunction payoff_from_json(const Json& doc, bool allow_decimal = false);
Json payoff_to_json(const PayoffFunction& f);

// FNV-1a 64 over the compact dump of game_to_json, as 16 hex digits.
std::string game_hash(const GameSpec& game);

std::string read_text_file(const std::filesystem::path& path);

// Seeded instance generation. Draws come from std::mt19937_64 seeded with the
// seed; a uniform choice among k options is draw % k.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t draw() { return engine_(); }
  std::size_t pick(std::size_t options) {
    return static_cast<std::size_t>(engine_() % options);
  }
  template <class T>
  const T& pick_from(const std::vector<T>& items) {
    return items[pick(items.size())];
  }

  // Labels s0, s1, ... per player; payoffs drawn from `values` in profile
  // order, player 0's table first.
  GameSpec game(const std::vector<std::size_t>& sizes,
                const std::vector<Rational>& values);
  // players from {2,3} then sizes from {2,3} each.
  GameSpec small_game(const std::vector<Rational>& values);

  // Subsets in ascending bitmask order; each value is a uniform multiple of
  // 1/denominator between the largest immediate-subset value and 1. Subsets
  // disjoint from `support` (when given) are forced to 0.
  FiniteCapacity capacity(const Domain& domain, long denominator,
                          const PointSet* support = nullptr);
  // Values k/denominator with k uniform in [lo*denominator, hi*denominator].
  PayoffFunction payoff(const Domain& domain, long lo, long hi,
                        long denominator);

 private:
  std::mt19937_64 engine_;
};

std::vector<Rational> default_payoff_values();  // {-2,-1,0,1,2}
Domain labeled_domain(std::string_view prefix, std::size_t size);

// Comma separated rationals, e.g. "0,1/2,1".
std::vector<Rational> parse_grid(std::string_view text);

}  // namespace sugeq
