#include "sugeq/equilibrium.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "sugeq/convexity.hpp"
#include "sugeq/error.hpp"
#include "sugeq/tensor.hpp"

namespace sugeq {

const char* to_string(SupportKind kind) {
  return kind == SupportKind::kPossibility ? "possibility" : "necessity";
}

const char* to_string(SupportFamily family) {
  return family == SupportFamily::kPossibility ? "possibility"
                                               : "possibility+necessity";
}

SupportProfile SupportProfile::possibility(std::vector<PointSet> strategies) {
  SupportProfile out;
  for (auto& s : strategies) {
    out.players.push_back({SupportKind::kPossibility, std::move(s)});
  }
  return out;
}

namespace {

void check_beliefs(const GameSpec& game, const BeliefSystem& beliefs) {
  if (beliefs.beliefs.size() != game.players()) {
    throw Error(ErrorCode::kDomainMismatch,
                "belief system has " + std::to_string(beliefs.beliefs.size()) +
                    " beliefs for " + std::to_string(game.players()) +
                    " players");
  }
  for (std::size_t i = 0; i < game.players(); ++i) {
    if (!beliefs.beliefs[i]) {
      throw Error(ErrorCode::kInvalidArgument, "missing belief");
    }
    if (!(beliefs.beliefs[i]->domain() == game.opponent_domain(i))) {
      throw Error(ErrorCode::kDomainMismatch,
                  "belief of player " + std::to_string(i) +
                      " is not on the opponents' joint strategy space");
    }
  }
}

void check_profile(const GameSpec& game, const SupportProfile& profile) {
  if (profile.players.size() != game.players()) {
    throw Error(ErrorCode::kInvalidArgument,
                "support profile arity does not match the game");
  }
  for (std::size_t j = 0; j < game.players(); ++j) {
    const auto& s = profile.players[j].strategies;
    if (s.size() != game.strategies(j).size()) {
      throw Error(ErrorCode::kDomainMismatch,
                  "support of player " + std::to_string(j) +
                      " is over a different strategy set");
    }
    if (s.none()) {
      throw Error(ErrorCode::kEmptySupport,
                  "support of player " + std::to_string(j) + " is empty");
    }
  }
}

// ∏_{j≠i} R_j as a subset of the opponent domain of i.
PointSet opponent_product(const GameSpec& game, std::size_t player,
                          const std::vector<PointSet>& best_responses) {
  const Domain& opp = game.opponent_domain(player);
  PointSet set(opp.size());
  for (std::size_t k = 0; k < opp.size(); ++k) {
    const auto tuple = opp.tuple_of(k);
    bool inside = true;
    for (std::size_t j = 0, t = 0; j < game.players() && inside; ++j) {
      if (j == player) continue;
      inside = best_responses[j].test(tuple[t++]);
    }
    if (inside) set.set(k);
  }
  return set;
}

BeliefSystem beliefs_from_capacities(
    const GameSpec& game, const std::vector<const FiniteCapacity*>& factors) {
  BeliefSystem out;
  for (std::size_t i = 0; i < game.players(); ++i) {
    std::vector<FiniteCapacity> others;
    for (std::size_t j = 0; j < game.players(); ++j) {
      if (j != i) others.push_back(*factors[j]);
    }
    out.beliefs.push_back(lazy_tensor(std::move(others)));
  }
  return out;
}

std::uint64_t checked_product(std::uint64_t acc, std::uint64_t factor,
                              std::uint64_t budget, const char* what) {
  if (factor != 0 && acc > budget / factor) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + " exceeds the budget of " +
                    std::to_string(budget) + " candidates");
  }
  return acc * factor;
}

}  // namespace

EquilibriumCertificate is_equilibrium(const GameSpec& game,
                                      const BeliefSystem& beliefs,
                                      const CorrectionMap& psi) {
  check_beliefs(game, beliefs);
  EquilibriumCertificate cert;
  cert.psi_id = psi.id();
  for (std::size_t j = 0; j < game.players(); ++j) {
    cert.best_responses.push_back(
        best_response(game, j, *beliefs.beliefs[j], psi));
  }
  cert.equilibrium = true;
  for (std::size_t i = 0; i < game.players(); ++i) {
    const PointSet inside = opponent_product(game, i, cert.best_responses);
    cert.verification.push_back(beliefs.beliefs[i]->value(~inside));
    cert.degenerate.push_back(is_bottom(*beliefs.beliefs[i]));
    cert.equilibrium = cert.equilibrium && cert.verification.back().is_zero();
  }
  return cert;
}

FiniteCapacity support_capacity(const Domain& strategies,
                                const PlayerSupport& support) {
  return support.kind == SupportKind::kPossibility
             ? possibility(strategies, support.strategies)
             : necessity(strategies, support.strategies);
}

BeliefSystem beliefs_from_supports(const GameSpec& game,
                                   const SupportProfile& profile) {
  check_profile(game, profile);
  std::vector<FiniteCapacity> caps;
  for (std::size_t j = 0; j < game.players(); ++j) {
    caps.push_back(support_capacity(game.strategies(j), profile.players[j]));
  }
  std::vector<const FiniteCapacity*> ptrs;
  for (const auto& c : caps) ptrs.push_back(&c);
  return beliefs_from_capacities(game, ptrs);
}

bool support_set_condition(const SupportProfile& profile,
                           const std::vector<PointSet>& best_responses) {
  for (std::size_t j = 0; j < profile.players.size(); ++j) {
    const auto& s = profile.players[j];
    const bool ok = s.kind == SupportKind::kPossibility
                        ? s.strategies.is_subset_of(best_responses[j])
                        : s.strategies.intersects(best_responses[j]);
    if (!ok) return false;
  }
  return true;
}

EquilibriumCertificate check_support_profile(const GameSpec& game,
                                             const SupportProfile& profile,
                                             const CorrectionMap& psi) {
  EquilibriumCertificate cert =
      is_equilibrium(game, beliefs_from_supports(game, profile), psi);
  cert.set_condition = support_set_condition(profile, cert.best_responses);
  return cert;
}

std::vector<PlayerSupport> candidate_supports(std::size_t strategies,
                                              SupportFamily family) {
  if (strategies == 0 || strategies > 20) {
    throw Error(ErrorCode::kBudgetExceeded,
                "support enumeration needs 1..20 strategies per player");
  }
  std::vector<PlayerSupport> out;
  const std::uint64_t count = std::uint64_t{1} << strategies;
  for (std::uint64_t m = 1; m < count; ++m) {
    out.push_back({SupportKind::kPossibility, make_set(strategies, m)});
  }
  if (family == SupportFamily::kPossibilityNecessity) {
    for (std::uint64_t m = 1; m < count; ++m) {
      if (std::popcount(m) < 2) continue;
      out.push_back({SupportKind::kNecessity, make_set(strategies, m)});
    }
  }
  return out;
}

std::uint64_t support_candidate_count(const GameSpec& game,
                                      SupportFamily family) {
  // Convert to a saturating count for reporting.
  constexpr std::uint64_t kCap = ~std::uint64_t{0};
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < game.players(); ++j) {
    const std::size_t k = game.strategies(j).size();
    if (k > 60) return kCap;
    std::uint64_t per = (std::uint64_t{1} << k) - 1;
    if (family == SupportFamily::kPossibilityNecessity) per += per - k;
    if (total > kCap / per) return kCap;
    total *= per;
  }
  return total;
}

SupportSearchResult find_equilibria_supports(
    const GameSpec& game, const CorrectionMap& psi,
    const SupportSearchOptions& options) {
  const std::uint64_t total = support_candidate_count(game, options.family);
  if (total > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "support search needs " + std::to_string(total) +
                    " candidate profiles, budget is " +
                    std::to_string(options.budget));
  }
  std::vector<std::vector<PlayerSupport>> choices;
  std::vector<std::vector<FiniteCapacity>> capacities;
  for (std::size_t j = 0; j < game.players(); ++j) {
    choices.push_back(
        candidate_supports(game.strategies(j).size(), options.family));
    auto& caps = capacities.emplace_back();
    for (const auto& s : choices.back()) {
      caps.push_back(support_capacity(game.strategies(j), s));
    }
  }

  using Chunk = std::vector<SupportEquilibrium>;
  auto chunks = detail::parallel_chunks<Chunk>(
      static_cast<std::size_t>(total), [&](std::size_t begin, std::size_t end) {
        Chunk found;
        std::vector<std::size_t> digits(game.players());
        for (std::size_t index = begin; index < end; ++index) {
          std::size_t rest = index;
          for (std::size_t j = game.players(); j-- > 0;) {
            digits[j] = rest % choices[j].size();
            rest /= choices[j].size();
          }
          SupportProfile profile;
          std::vector<const FiniteCapacity*> factors;
          for (std::size_t j = 0; j < game.players(); ++j) {
            profile.players.push_back(choices[j][digits[j]]);
            factors.push_back(&capacities[j][digits[j]]);
          }
          EquilibriumCertificate cert =
              is_equilibrium(game, beliefs_from_capacities(game, factors), psi);
          if (!cert.equilibrium) continue;
          cert.set_condition =
              support_set_condition(profile, cert.best_responses);
          found.push_back({std::move(profile), std::move(cert)});
        }
        return found;
      });

  SupportSearchResult result;
  result.candidates = total;
  for (auto& chunk : chunks) {
    for (auto& e : chunk) result.equilibria.push_back(std::move(e));
  }
  return result;
}

IterationResult iterate_best_response_supports(const GameSpec& game,
                                               const CorrectionMap& psi,
                                               std::size_t max_iters) {
  if (max_iters == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_iters must be at least 1");
  }
  IterationResult out;
  std::vector<PointSet> full;
  for (std::size_t j = 0; j < game.players(); ++j) {
    full.push_back(game.strategies(j).full_set());
  }
  out.trajectory.push_back(SupportProfile::possibility(std::move(full)));
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    const SupportProfile& current = out.trajectory.back();
    const EquilibriumCertificate cert =
        is_equilibrium(game, beliefs_from_supports(game, current), psi);
    SupportProfile next = SupportProfile::possibility(cert.best_responses);
    if (next == current) {
      out.status = IterationStatus::kStable;
      out.stable = current;
      out.certificate = check_support_profile(game, current, psi);
      return out;
    }
    auto seen = std::find(out.trajectory.begin(), out.trajectory.end(), next);
    if (seen != out.trajectory.end()) {
      out.status = IterationStatus::kCycle;
      out.cycle_start =
          static_cast<std::size_t>(seen - out.trajectory.begin());
      out.trajectory.push_back(std::move(next));
      return out;
    }
    out.trajectory.push_back(std::move(next));
  }
  out.status = IterationStatus::kIterationLimit;
  return out;
}

GridSearchResult find_equilibria_grid(const GameSpec& game,
                                      const CorrectionMap& psi,
                                      const std::vector<Rational>& grid,
                                      std::uint64_t budget) {
  GridSearchResult result;
  std::vector<std::vector<CapacityPtr>> shared;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < game.players(); ++i) {
    auto space = enumerate_capacities(game.opponent_domain(i), grid);
    auto& ptrs = shared.emplace_back();
    for (const auto& c : space.capacities) {
      ptrs.push_back(std::make_shared<const FiniteCapacity>(c));
    }
    total = checked_product(total, space.capacities.size(), budget,
                            "grid belief enumeration");
    result.spaces.push_back(std::move(space.capacities));
  }
  result.candidates = total;

  using Chunk = std::vector<GridEquilibrium>;
  auto chunks = detail::parallel_chunks<Chunk>(
      static_cast<std::size_t>(total), [&](std::size_t begin, std::size_t end) {
        Chunk found;
        for (std::size_t index = begin; index < end; ++index) {
          std::size_t rest = index;
          std::vector<std::size_t> digits(game.players());
          for (std::size_t i = game.players(); i-- > 0;) {
            digits[i] = rest % shared[i].size();
            rest /= shared[i].size();
          }
          BeliefSystem beliefs;
          for (std::size_t i = 0; i < game.players(); ++i) {
            beliefs.beliefs.push_back(shared[i][digits[i]]);
          }
          EquilibriumCertificate cert = is_equilibrium(game, beliefs, psi);
          if (cert.equilibrium) {
            found.push_back(
                {std::move(beliefs), std::move(digits), std::move(cert)});
          }
        }
        return found;
      });
  for (auto& chunk : chunks) {
    for (auto& e : chunk) result.equilibria.push_back(std::move(e));
  }
  return result;
}

std::vector<std::vector<std::size_t>> pure_nash(const GameSpec& game) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t index = 0; index < game.profile_count(); ++index) {
    const auto profile = game.profile_of(index);
    bool stable = true;
    for (std::size_t i = 0; i < game.players() && stable; ++i) {
      const Rational& current = game.payoff(i, profile);
      auto deviation = profile;
      for (std::size_t x = 0; x < game.strategies(i).size(); ++x) {
        deviation[i] = x;
        if (game.payoff(i, deviation) > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(profile);
  }
  return out;
}

}  // namespace sugeq
