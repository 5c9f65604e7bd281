#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sugeq/capacity.hpp"
#include "sugeq/game.hpp"
#include "sugeq/sugeno.hpp"

namespace sugeq {

// beliefs[i] is player i's capacity on the opponent domain.
struct BeliefSystem {
  std::vector<CapacityPtr> beliefs;
};

enum class SupportKind {
  // value 1 on sets meeting the support
  kPossibility,
  // value 1 on sets containing the support
  kNecessity,
};

const char* to_string(SupportKind kind);

struct PlayerSupport {
  SupportKind kind = SupportKind::kPossibility;
  PointSet strategies;

  friend bool operator==(const PlayerSupport&, const PlayerSupport&) = default;
};

struct SupportProfile {
  std::vector<PlayerSupport> players;

  static SupportProfile possibility(std::vector<PointSet> strategies);
  friend bool operator==(const SupportProfile&, const SupportProfile&) = default;
};

struct EquilibriumCertificate {
  std::string psi_id;
  std::vector<PointSet> best_responses;
  // ν_i(X_{-i} \ ∏_{j≠i} R_j)
  std::vector<Rational> verification;
  // ν_i is the bottom capacity, which vanishes outside every nonempty set.
  std::vector<bool> degenerate;
  bool equilibrium = false;
  // Combinatorial form of the condition for support profiles: S_j ⊆ R_j for
  // possibility supports and S_j ∩ R_j ≠ ∅ for necessity supports.
  std::optional<bool> set_condition;
};

EquilibriumCertificate is_equilibrium(const GameSpec& game,
                                      const BeliefSystem& beliefs,
                                      const CorrectionMap& psi);

// Capacity of a player support on that player's strategy set.
FiniteCapacity support_capacity(const Domain& strategies,
                                const PlayerSupport& support);

// ν_i = lazy ⊗_{j≠i} μ_j, ascending j.
BeliefSystem beliefs_from_supports(const GameSpec& game,
                                   const SupportProfile& profile);

bool support_set_condition(const SupportProfile& profile,
                           const std::vector<PointSet>& best_responses);

EquilibriumCertificate check_support_profile(const GameSpec& game,
                                             const SupportProfile& profile,
                                             const CorrectionMap& psi);

enum class SupportFamily {
  // Possibility supports only.
  kPossibility,
  // Possibility supports plus necessity supports of size >= 2 (singleton
  // necessity coincides with singleton possibility).
  kPossibilityNecessity,
};

const char* to_string(SupportFamily family);

struct SupportSearchOptions {
  SupportFamily family = SupportFamily::kPossibility;
  std::uint64_t budget = std::uint64_t{1} << 24;
};

struct SupportEquilibrium {
  SupportProfile profile;
  EquilibriumCertificate certificate;
};

struct SupportSearchResult {
  std::uint64_t candidates = 0;
  std::vector<SupportEquilibrium> equilibria;
};

// Candidate supports of one player in scan order: possibility supports by
// ascending bitmask, then necessity supports by ascending bitmask.
std::vector<PlayerSupport> candidate_supports(std::size_t strategies,
                                              SupportFamily family);

std::uint64_t support_candidate_count(const GameSpec& game,
                                      SupportFamily family);

// Exhaustive scan; the last player varies fastest. Throws kBudgetExceeded.
SupportSearchResult find_equilibria_supports(
    const GameSpec& game, const CorrectionMap& psi,
    const SupportSearchOptions& options = {});

enum class IterationStatus { kStable, kCycle, kIterationLimit };

struct IterationResult {
  IterationStatus status = IterationStatus::kIterationLimit;
  // trajectory[0] is the full-support profile.
  std::vector<SupportProfile> trajectory;
  std::optional<SupportProfile> stable;
  std::optional<EquilibriumCertificate> certificate;
  // For kCycle: index into trajectory where the repeated profile first
  // appeared.
  std::size_t cycle_start = 0;
};

// S_i <- R_i(possibility beliefs of S), starting from S_i = X_i.
IterationResult iterate_best_response_supports(const GameSpec& game,
                                               const CorrectionMap& psi,
                                               std::size_t max_iters);

struct GridEquilibrium {
  BeliefSystem beliefs;
  // Index of each belief in the per-player enumerated grid space.
  std::vector<std::size_t> indices;
  EquilibriumCertificate certificate;
};

struct GridSearchResult {
  // Enumerated belief capacities per player.
  std::vector<std::vector<FiniteCapacity>> spaces;
  std::uint64_t candidates = 0;
  std::vector<GridEquilibrium> equilibria;
};

// Brute force over all belief systems with values in the grid.
GridSearchResult find_equilibria_grid(const GameSpec& game,
                                      const CorrectionMap& psi,
                                      const std::vector<Rational>& grid,
                                      std::uint64_t budget = 1u << 20);

// Profiles (one strategy index per player) from which no player gains by a
// unilateral deviation.
std::vector<std::vector<std::size_t>> pure_nash(const GameSpec& game);

}  // namespace sugeq
