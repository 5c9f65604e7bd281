#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sugeq/capacity.hpp"

namespace sugeq {

// (μ1⊗μ2)(B) = Sugeno_{μ1}(x ↦ μ2(B_x)) where B_x is the section of B at x.
// The result lives on Domain::product({μ1.domain, μ2.domain}).
// Throws kProductTooLarge when the product exceeds the dense cap.
FiniteCapacity tensor2(const FiniteCapacity& first, const FiniteCapacity& second);

// Left-associated fold of tensor2 in the given order.
FiniteCapacity tensor_n(std::span<const FiniteCapacity> factors);

// Pushforward along the projection onto atomic factor `factor`.
FiniteCapacity marginal(const CapacityView& capacity, std::size_t factor);

// On-demand evaluation of the left-folded product; never materializes the
// 2^|product| table.
class LazyTensor final : public CapacityView {
 public:
  explicit LazyTensor(std::vector<FiniteCapacity> factors);

  const Domain& domain() const override { return domain_; }
  Rational value(const PointSet& subset) const override;

  const std::vector<FiniteCapacity>& factors() const { return factors_; }

 private:
  Rational evaluate(std::size_t last, const PointSet& subset) const;

  std::vector<FiniteCapacity> factors_;
  // prefix_size_[k] = |X_0 × ... × X_k|
  std::vector<std::size_t> prefix_size_;
  Domain domain_;
};

CapacityPtr lazy_tensor(std::vector<FiniteCapacity> factors);

// Compares (a⊗b)⊗c against a⊗(b⊗c) on every subset of the product.
struct BracketingDiagnostic {
  std::uint64_t subsets_compared = 0;
  std::uint64_t discrepancies = 0;
  std::optional<std::uint32_t> first_discrepancy;
};
BracketingDiagnostic compare_bracketings(const FiniteCapacity& a,
                                         const FiniteCapacity& b,
                                         const FiniteCapacity& c);

}  // namespace sugeq
