#include "sugeq/game.hpp"

#include <algorithm>

#include "sugeq/error.hpp"

namespace sugeq {

GameSpec::GameSpec(std::vector<Domain> strategies,
                   std::vector<std::vector<Rational>> payoffs)
    : strategies_(std::move(strategies)), payoffs_(std::move(payoffs)) {
  if (strategies_.size() < 2) {
    throw Error(ErrorCode::kValidation, "a game needs at least two players");
  }
  profile_count_ = 1;
  for (const auto& s : strategies_) {
    if (s.size() == 0) {
      throw Error(ErrorCode::kValidation, "every strategy set must be nonempty");
    }
    profile_count_ *= s.size();
  }
  if (payoffs_.size() != strategies_.size()) {
    throw Error(ErrorCode::kValidation, "expected one payoff table per player");
  }
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    if (payoffs_[i].size() != profile_count_) {
      throw Error(ErrorCode::kValidation,
                  "payoff table of player " + std::to_string(i) + " has " +
                      std::to_string(payoffs_[i].size()) + " entries, expected " +
                      std::to_string(profile_count_));
    }
  }
  for (std::size_t i = 0; i < strategies_.size(); ++i) {
    std::vector<Domain> others;
    for (std::size_t j = 0; j < strategies_.size(); ++j) {
      if (j != i) others.push_back(strategies_[j]);
    }
    opponents_.push_back(Domain::product(others));
  }
}

void GameSpec::check_player(std::size_t player) const {
  if (player >= players()) {
    throw Error(ErrorCode::kIndex, "player index " + std::to_string(player) +
                                       " out of range");
  }
}

const Domain& GameSpec::strategies(std::size_t player) const {
  check_player(player);
  return strategies_[player];
}

const std::vector<Rational>& GameSpec::payoff_table(std::size_t player) const {
  check_player(player);
  return payoffs_[player];
}

const Domain& GameSpec::opponent_domain(std::size_t player) const {
  check_player(player);
  return opponents_[player];
}

std::size_t GameSpec::profile_index(std::span<const std::size_t> profile) const {
  if (profile.size() != players()) {
    throw Error(ErrorCode::kIndex, "profile arity mismatch");
  }
  std::size_t index = 0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (profile[j] >= strategies_[j].size()) {
      throw Error(ErrorCode::kIndex, "strategy index out of range");
    }
    index = index * strategies_[j].size() + profile[j];
  }
  return index;
}

std::vector<std::size_t> GameSpec::profile_of(std::size_t index) const {
  std::vector<std::size_t> profile(players());
  for (std::size_t j = players(); j-- > 0;) {
    profile[j] = index % strategies_[j].size();
    index /= strategies_[j].size();
  }
  return profile;
}

const Rational& GameSpec::payoff(std::size_t player,
                                 std::span<const std::size_t> profile) const {
  check_player(player);
  return payoffs_[player][profile_index(profile)];
}

std::vector<std::size_t> GameSpec::profile(std::size_t player, std::size_t own,
                                           std::size_t opponents) const {
  check_player(player);
  if (own >= strategies_[player].size()) {
    throw Error(ErrorCode::kIndex, "strategy index out of range");
  }
  const auto tuple = opponents_[player].tuple_of(opponents);
  std::vector<std::size_t> out;
  out.reserve(players());
  for (std::size_t j = 0, k = 0; j < players(); ++j) {
    out.push_back(j == player ? own : tuple[k++]);
  }
  return out;
}

PayoffFunction payoff_slice(const GameSpec& game, std::size_t player,
                            std::size_t own) {
  const Domain& opp = game.opponent_domain(player);
  std::vector<Rational> values;
  values.reserve(opp.size());
  for (std::size_t k = 0; k < opp.size(); ++k) {
    values.push_back(game.payoff(player, game.profile(player, own, k)));
  }
  return PayoffFunction(opp, std::move(values));
}

Rational expected_payoff(const GameSpec& game, std::size_t player,
                         std::size_t own, const CapacityView& belief,
                         const CorrectionMap& psi) {
  require_same_domain(game.opponent_domain(player), belief.domain(),
                      "expected_payoff");
  return sugeno_integral(payoff_slice(game, player, own), belief, psi);
}

PointSet best_response(const GameSpec& game, std::size_t player,
                       const CapacityView& belief, const CorrectionMap& psi) {
  const std::size_t n = game.strategies(player).size();
  std::vector<Rational> values;
  values.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    values.push_back(expected_payoff(game, player, x, belief, psi));
  }
  const Rational best = *std::max_element(values.begin(), values.end());
  PointSet out(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (values[x] == best) out.set(x);
  }
  return out;
}

}  // namespace sugeq
