#include "sugeq/capacity.hpp"

#include <bit>

#include "sugeq/error.hpp"

namespace sugeq {

namespace {

std::vector<std::string> labels_of_mask(const Domain& domain,
                                        std::uint32_t mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if ((mask >> i) & 1u) out.push_back(domain.label(i));
  }
  return out;
}

std::string describe_mask(const Domain& domain, std::uint32_t mask) {
  return domain.describe(make_set(domain.size(), mask));
}

template <class Fn>
FiniteCapacity tabulate(const Domain& domain, Fn&& fn) {
  require_dense(domain);
  const std::uint32_t count = std::uint32_t{1} << domain.size();
  std::vector<Rational> table;
  table.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) table.push_back(fn(mask));
  return FiniteCapacity(domain, std::move(table));
}

std::uint32_t dense_mask(const PointSet& set) {
  return static_cast<std::uint32_t>(mask_of(set));
}

void require_support(const Domain& domain, const PointSet& support) {
  if (support.size() != domain.size()) {
    throw Error(ErrorCode::kDomainMismatch, "support over a different domain");
  }
  if (support.none()) {
    throw Error(ErrorCode::kEmptySupport, "support must be nonempty");
  }
}

}  // namespace

void require_dense(const Domain& domain) {
  if (domain.size() == 0) {
    throw Error(ErrorCode::kValidation, "capacity on an empty domain");
  }
  if (domain.size() > FiniteCapacity::kMaxPoints) {
    throw Error(ErrorCode::kProductTooLarge,
                "domain of " + std::to_string(domain.size()) +
                    " points exceeds the dense capacity cap of " +
                    std::to_string(FiniteCapacity::kMaxPoints));
  }
}

void require_same_domain(const Domain& a, const Domain& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::kDomainMismatch,
                std::string(what) + ": capacities live on different domains");
  }
}

FiniteCapacity::FiniteCapacity(Domain domain, std::vector<Rational> table)
    : domain_(std::move(domain)) {
  require_dense(domain_);
  const std::size_t count = std::size_t{1} << domain_.size();
  if (table.size() != count) {
    throw Error(ErrorCode::kValidation,
                "capacity table has " + std::to_string(table.size()) +
                    " entries, expected " + std::to_string(count));
  }
  const Rational zero(0);
  const Rational one(1);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (table[mask] < zero || table[mask] > one) {
      throw Error(ErrorCode::kRange, "value " + table[mask].str() + " of " +
                                         describe_mask(domain_, mask) +
                                         " is outside [0,1]");
    }
  }
  // Covering pairs suffice: monotonicity is transitive.
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (mask & bit) continue;
      if (table[mask] > table[mask | bit]) {
        throw MonotonicityError(labels_of_mask(domain_, mask),
                                labels_of_mask(domain_, mask | bit));
      }
    }
  }
  if (!table.front().is_zero()) {
    throw Error(ErrorCode::kNormalization,
                "value of the empty set is " + table.front().str() +
                    ", expected 0");
  }
  if (table.back() != one) {
    throw Error(ErrorCode::kNormalization,
                "value of the full domain is " + table.back().str() +
                    ", expected 1");
  }
  table_ = std::make_shared<const std::vector<Rational>>(std::move(table));
}

Rational FiniteCapacity::value(const PointSet& subset) const {
  if (subset.size() != domain_.size()) {
    throw Error(ErrorCode::kDomainMismatch,
                "subset of a different domain passed to a capacity");
  }
  return (*table_)[dense_mask(subset)];
}

bool operator==(const FiniteCapacity& a, const FiniteCapacity& b) {
  return a.domain_ == b.domain_ &&
         (a.table_ == b.table_ || *a.table_ == *b.table_);
}

FiniteCapacity new_capacity(const Domain& domain,
                            const std::map<std::uint32_t, Rational>& table) {
  require_dense(domain);
  const std::uint32_t count = std::uint32_t{1} << domain.size();
  std::vector<Rational> dense;
  dense.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    auto it = table.find(mask);
    if (it == table.end()) {
      throw Error(ErrorCode::kValidation, "capacity table is missing subset " +
                                              describe_mask(domain, mask));
    }
    dense.push_back(it->second);
  }
  for (const auto& [mask, value] : table) {
    if (mask >= count) {
      throw Error(ErrorCode::kValidation, "capacity table has a subset outside "
                                          "the domain");
    }
  }
  return FiniteCapacity(domain, std::move(dense));
}

FiniteCapacity dirac(const Domain& domain, std::string_view label) {
  const std::uint32_t bit = std::uint32_t{1} << domain.index_of(label);
  return tabulate(domain, [&](std::uint32_t mask) {
    return Rational((mask & bit) ? 1 : 0);
  });
}

FiniteCapacity possibility(const Domain& domain, const PointSet& support) {
  require_support(domain, support);
  const std::uint32_t s = dense_mask(support);
  return tabulate(domain, [&](std::uint32_t mask) {
    return Rational((mask & s) ? 1 : 0);
  });
}

FiniteCapacity necessity(const Domain& domain, const PointSet& support) {
  require_support(domain, support);
  const std::uint32_t s = dense_mask(support);
  return tabulate(domain, [&](std::uint32_t mask) {
    return Rational((mask & s) == s ? 1 : 0);
  });
}

FiniteCapacity top_capacity(const Domain& domain) {
  return tabulate(domain,
                  [](std::uint32_t mask) { return Rational(mask ? 1 : 0); });
}

FiniteCapacity bottom_capacity(const Domain& domain) {
  require_dense(domain);
  const std::uint32_t full = (std::uint32_t{1} << domain.size()) - 1;
  return tabulate(domain, [&](std::uint32_t mask) {
    return Rational(mask == full ? 1 : 0);
  });
}

FiniteCapacity from_probability(const Domain& domain,
                                std::span<const Rational> weights) {
  if (weights.size() != domain.size()) {
    throw Error(ErrorCode::kWeightSum, "expected one weight per point");
  }
  Rational sum(0);
  for (const auto& w : weights) {
    if (w.sign() < 0) {
      throw Error(ErrorCode::kWeightSum, "negative weight " + w.str());
    }
    sum += w;
  }
  if (sum != Rational(1)) {
    throw Error(ErrorCode::kWeightSum, "weights sum to " + sum.str());
  }
  return tabulate(domain, [&](std::uint32_t mask) {
    Rational v(0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if ((mask >> i) & 1u) v += weights[i];
    }
    return v;
  });
}

FiniteCapacity from_probability(
    const Domain& domain, const std::map<std::string, Rational>& weights) {
  std::vector<Rational> dense(domain.size(), Rational(0));
  for (const auto& [label, w] : weights) dense[domain.index_of(label)] = w;
  return from_probability(domain, dense);
}

FiniteCapacity join(const FiniteCapacity& a, const FiniteCapacity& b) {
  require_same_domain(a.domain(), b.domain(), "join");
  return tabulate(a.domain(),
                  [&](std::uint32_t m) { return max(a.at(m), b.at(m)); });
}

FiniteCapacity meet(const FiniteCapacity& a, const FiniteCapacity& b) {
  require_same_domain(a.domain(), b.domain(), "meet");
  return tabulate(a.domain(),
                  [&](std::uint32_t m) { return min(a.at(m), b.at(m)); });
}

bool leq(const FiniteCapacity& a, const FiniteCapacity& b) {
  require_same_domain(a.domain(), b.domain(), "leq");
  for (std::uint32_t m = 0; m <= a.full_mask(); ++m) {
    if (a.at(m) > b.at(m)) return false;
  }
  return true;
}

FiniteCapacity pushforward(const CapacityView& capacity, const Domain& codomain,
                           std::span<const std::size_t> image) {
  const Domain& domain = capacity.domain();
  if (image.size() != domain.size()) {
    throw Error(ErrorCode::kValidation, "map must be total on the domain");
  }
  for (auto y : image) {
    if (y >= codomain.size()) {
      throw Error(ErrorCode::kUnknownLabel, "map image outside the codomain");
    }
  }
  return tabulate(codomain, [&](std::uint32_t mask) {
    PointSet preimage(domain.size());
    for (std::size_t x = 0; x < image.size(); ++x) {
      if ((mask >> image[x]) & 1u) preimage.set(x);
    }
    return capacity.value(preimage);
  });
}

FiniteCapacity pushforward(const CapacityView& capacity, const Domain& codomain,
                           const std::map<std::string, std::string>& image) {
  const Domain& domain = capacity.domain();
  std::vector<std::size_t> dense(domain.size());
  for (std::size_t x = 0; x < domain.size(); ++x) {
    auto it = image.find(domain.label(x));
    if (it == image.end()) {
      throw Error(ErrorCode::kUnknownLabel,
                  "map is undefined at \"" + domain.label(x) + "\"");
    }
    dense[x] = codomain.index_of(it->second);
  }
  return pushforward(capacity, codomain, dense);
}

bool vanishes_outside(const CapacityView& capacity, const PointSet& subset) {
  if (subset.size() != capacity.domain().size()) {
    throw Error(ErrorCode::kDomainMismatch, "subset of a different domain");
  }
  return capacity.value(~subset).is_zero();
}

bool is_bottom(const CapacityView& capacity) {
  const std::size_t n = capacity.domain().size();
  PointSet almost = capacity.domain().full_set();
  for (std::size_t i = 0; i < n; ++i) {
    almost.reset(i);
    if (!capacity.value(almost).is_zero()) return false;
    almost.set(i);
  }
  return true;
}

FiniteCapacity materialize(const CapacityView& capacity) {
  const Domain& domain = capacity.domain();
  return tabulate(domain, [&](std::uint32_t mask) {
    return capacity.value(make_set(domain.size(), mask));
  });
}

}  // namespace sugeq
