#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sugeq/domain.hpp"
#include "sugeq/rational.hpp"

namespace sugeq {

// Evaluation contract shared by dense tables and lazy tensor products:
// a normalized monotone set function with values in [0,1].
class CapacityView {
 public:
  virtual ~CapacityView() = default;
  virtual const Domain& domain() const = 0;
  virtual Rational value(const PointSet& subset) const = 0;
};

using CapacityPtr = std::shared_ptr<const CapacityView>;

// Dense table indexed by subset bitmask. Immutable; copies share the table.
class FiniteCapacity final : public CapacityView {
 public:
  static constexpr std::size_t kMaxPoints = 20;

  // Validates range, monotonicity, then normalization (in that order).
  FiniteCapacity(Domain domain, std::vector<Rational> table);

  const Domain& domain() const override { return domain_; }
  Rational value(const PointSet& subset) const override;

  const Rational& at(std::uint32_t mask) const { return (*table_)[mask]; }
  std::span<const Rational> table() const { return *table_; }
  std::uint32_t full_mask() const {
    return static_cast<std::uint32_t>(table_->size() - 1);
  }

  friend bool operator==(const FiniteCapacity& a, const FiniteCapacity& b);

 private:
  Domain domain_;
  std::shared_ptr<const std::vector<Rational>> table_;
};

// Throws ErrorCode::kProductTooLarge above FiniteCapacity::kMaxPoints.
void require_dense(const Domain& domain);

// Table keyed by bitmask; every subset must be present, else kValidation
// naming the first missing subset.
FiniteCapacity new_capacity(const Domain& domain,
                            const std::map<std::uint32_t, Rational>& table);

FiniteCapacity dirac(const Domain& domain, std::string_view label);
FiniteCapacity possibility(const Domain& domain, const PointSet& support);
// value(A) = 1 iff support ⊆ A. necessity(X) is the bottom capacity.
FiniteCapacity necessity(const Domain& domain, const PointSet& support);
FiniteCapacity top_capacity(const Domain& domain);
FiniteCapacity bottom_capacity(const Domain& domain);

// weights indexed by domain point; nonnegative, summing to 1.
FiniteCapacity from_probability(const Domain& domain,
                                std::span<const Rational> weights);
FiniteCapacity from_probability(const Domain& domain,
                                const std::map<std::string, Rational>& weights);

FiniteCapacity join(const FiniteCapacity& a, const FiniteCapacity& b);
FiniteCapacity meet(const FiniteCapacity& a, const FiniteCapacity& b);
// Pointwise a <= b. Throws kDomainMismatch.
bool leq(const FiniteCapacity& a, const FiniteCapacity& b);

// Image capacity A ↦ μ(f⁻¹(A)); image[x] is the codomain index of point x.
FiniteCapacity pushforward(const CapacityView& capacity, const Domain& codomain,
                           std::span<const std::size_t> image);
FiniteCapacity pushforward(const CapacityView& capacity, const Domain& codomain,
                           const std::map<std::string, std::string>& image);

// μ(X \ A) == 0.
bool vanishes_outside(const CapacityView& capacity, const PointSet& subset);

// True iff the capacity is the bottom element: zero on every proper subset.
// Checks the |X| maximal proper subsets only.
bool is_bottom(const CapacityView& capacity);

// Dense copy of any capacity view (validated).
FiniteCapacity materialize(const CapacityView& capacity);

void require_same_domain(const Domain& a, const Domain& b, const char* what);

}  // namespace sugeq
