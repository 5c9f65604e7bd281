#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sugeq/capacity.hpp"

namespace sugeq {

// [ν, μ] = {α : ν∧μ ≤ α ≤ ν∨μ}.
class CapacityInterval {
 public:
  CapacityInterval(const FiniteCapacity& first, const FiniteCapacity& second);

  const FiniteCapacity& lo() const { return lo_; }
  const FiniteCapacity& hi() const { return hi_; }

 private:
  FiniteCapacity lo_;
  FiniteCapacity hi_;
};

// Throws kDomainMismatch.
bool interval_membership(const CapacityInterval& interval,
                         const FiniteCapacity& alpha);

struct GridCapacitySpace {
  Domain domain;
  std::vector<Rational> grid;
  // Every capacity with values in the grid, in lexicographic order of the
  // value table.
  std::vector<FiniteCapacity> capacities;
};

// Grid must contain 0 and 1 and lie in [0,1]. Budget: |domain| <= 4 and at
// most 5 grid values.
GridCapacitySpace enumerate_capacities(const Domain& domain,
                                       std::vector<Rational> grid);

struct BinarityOptions {
  // Additionally test every linked subfamily (only for <= 20 intervals).
  bool full_linked_families = false;
  std::size_t max_intervals = 20000;
};

struct BinarityReport {
  std::size_t capacities = 0;
  std::size_t intervals = 0;
  std::uint64_t linked_pairs = 0;
  std::uint64_t linked_triples = 0;
  std::uint64_t failures = 0;
  // Interval indices (into the distinct (lo, hi) list) of the first failure.
  std::optional<std::array<std::size_t, 3>> counterexample;
  bool full_families_checked = false;
  std::uint64_t linked_families = 0;
  std::uint64_t family_failures = 0;

  bool passed() const { return failures == 0 && family_failures == 0; }
};

BinarityReport check_binarity(const GridCapacitySpace& space,
                              const BinarityOptions& options = {});

struct SeparatingHalves {
  PointSet witness;  // A with first(A) != second(A)
  Rational level;    // (first(A) + second(A)) / 2
  // Contains the first argument and excludes the second.
  CapacityInterval first_half;
  // Contains the second argument and excludes the first.
  CapacityInterval second_half;
};

// Throws kEqualCapacities / kDomainMismatch.
SeparatingHalves separating_halves(const FiniteCapacity& first,
                                   const FiniteCapacity& second);

struct T2Report {
  std::size_t capacities = 0;
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  // Members of the upper half [ν_1, top] that disagree with α(A) >= a (and
  // likewise for the lower half), over the space.
  std::uint64_t half_identity_failures = 0;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;

  bool passed() const { return failures == 0 && half_identity_failures == 0; }
};

T2Report check_t2(const GridCapacitySpace& space);

}  // namespace sugeq
