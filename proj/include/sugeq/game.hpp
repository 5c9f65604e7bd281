#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sugeq/capacity.hpp"
#include "sugeq/domain.hpp"
#include "sugeq/rational.hpp"
#include "sugeq/sugeno.hpp"

namespace sugeq {

// Finite n-player game. payoffs[i] is player i's payoff over the profile
// space ∏X_j, flattened in mixed radix with player 0 most significant.
class GameSpec {
 public:
  GameSpec(std::vector<Domain> strategies,
           std::vector<std::vector<Rational>> payoffs);

  std::size_t players() const { return strategies_.size(); }
  const Domain& strategies(std::size_t player) const;
  const std::vector<Domain>& strategy_sets() const { return strategies_; }
  std::size_t profile_count() const { return profile_count_; }

  const Rational& payoff(std::size_t player,
                         std::span<const std::size_t> profile) const;
  const std::vector<Rational>& payoff_table(std::size_t player) const;

  // ∏_{j≠i} X_j in ascending j; for two players this is X_j itself.
  const Domain& opponent_domain(std::size_t player) const;
  // Full profile from player i's strategy and an opponent-domain index.
  std::vector<std::size_t> profile(std::size_t player, std::size_t own,
                                   std::size_t opponents) const;
  std::size_t profile_index(std::span<const std::size_t> profile) const;
  std::vector<std::size_t> profile_of(std::size_t index) const;

 private:
  void check_player(std::size_t player) const;

  std::vector<Domain> strategies_;
  std::vector<std::vector<Rational>> payoffs_;
  std::vector<Domain> opponents_;
  std::size_t profile_count_ = 0;
};

// p_i(x_i, ·) as a function on the opponent domain.
PayoffFunction payoff_slice(const GameSpec& game, std::size_t player,
                            std::size_t own);

Rational expected_payoff(const GameSpec& game, std::size_t player,
                         std::size_t own, const CapacityView& belief,
                         const CorrectionMap& psi);

// Exact argmax of the expected payoff; ties are kept.
PointSet best_response(const GameSpec& game, std::size_t player,
                       const CapacityView& belief, const CorrectionMap& psi);

}  // namespace sugeq
