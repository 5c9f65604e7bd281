#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sugeq/capacity.hpp"
#include "sugeq/equilibrium.hpp"
#include "sugeq/game.hpp"
#include "sugeq/io.hpp"
#include "sugeq/sugeno.hpp"

namespace sugeq {

// Shared configuration of every command; embedded verbatim in each report.
struct RunConfig {
  std::string psi = "rational";
  std::vector<Rational> grid{Rational(0), Rational(1, 2), Rational(1)};
  std::uint64_t seed = 0;
  std::uint64_t budget = std::uint64_t{1} << 24;
  Rational resolution{1, 1000};
  std::uint64_t trials = 1000;
  SupportFamily family = SupportFamily::kPossibility;
  bool full_linked = false;

  Json to_json() const;
};

// A finished command: the structured report plus the pass/fail verdict that
// drives the exit code. Per-run timing lives under report["timing"] and is
// the only nondeterministic part.
struct CommandResult {
  Json report;
  bool passed = true;
};

Json certificate_to_json(const GameSpec& game,
                         const EquilibriumCertificate& certificate);
Json support_profile_to_json(const GameSpec& game,
                             const SupportProfile& profile);

CommandResult run_integrate(const PayoffFunction& f, const FiniteCapacity& mu,
                            const RunConfig& config);
CommandResult run_tensor(const std::vector<FiniteCapacity>& factors, bool lazy,
                         const std::vector<std::string>& queries,
                         const RunConfig& config);
CommandResult run_best_response(const GameSpec& game, std::size_t player,
                                const FiniteCapacity& belief,
                                const RunConfig& config);
CommandResult run_check_beliefs(const GameSpec& game,
                                const std::vector<FiniteCapacity>& beliefs,
                                const RunConfig& config);
CommandResult run_check_supports(const GameSpec& game,
                                 const SupportProfile& profile,
                                 const RunConfig& config);
CommandResult run_solve(const GameSpec& game, const RunConfig& config);
CommandResult run_verify_convexity(std::size_t domain_size,
                                   const RunConfig& config);
CommandResult run_oracle_compare(const RunConfig& config);

// Parses "A,B;A" (one ';'-separated group per player, strategies by label) with
// an optional "nec:" prefix per group for necessity supports.
SupportProfile parse_support_profile(const GameSpec& game,
                                     std::string_view text);

// Report with the "timing" member removed, dumped compactly.
std::string deterministic_dump(const Json& report);

}  // namespace sugeq
