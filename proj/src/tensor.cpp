#include "sugeq/tensor.hpp"

#include <algorithm>

#include "sugeq/error.hpp"

namespace sugeq {

namespace {

// Sugeno of the section values against an outer capacity given as a
// callable on level sets. Descending scan with early exit.
template <class Outer>
Rational sections_sugeno(const std::vector<Rational>& sections, Outer&& outer) {
  std::vector<Rational> values = sections;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Rational best(0);
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    if (*it <= best) break;
    const Rational level_value = outer(*it);
    const Rational& candidate = min(*it, level_value);
    if (candidate > best) best = candidate;
  }
  return best;
}

}  // namespace

FiniteCapacity tensor2(const FiniteCapacity& first,
                       const FiniteCapacity& second) {
  const Domain domains[] = {first.domain(), second.domain()};
  Domain product = Domain::product(domains);
  require_dense(product);
  const std::size_t n1 = first.domain().size();
  const std::size_t n2 = second.domain().size();
  const std::uint32_t section_mask = (std::uint32_t{1} << n2) - 1;
  const std::uint32_t count = std::uint32_t{1} << (n1 * n2);

  std::vector<Rational> table;
  table.reserve(count);
  std::vector<Rational> sections(n1);
  for (std::uint32_t b = 0; b < count; ++b) {
    for (std::size_t x = 0; x < n1; ++x) {
      sections[x] = second.at((b >> (x * n2)) & section_mask);
    }
    table.push_back(sections_sugeno(sections, [&](const Rational& v) {
      std::uint32_t level = 0;
      for (std::size_t x = 0; x < n1; ++x) {
        if (sections[x] >= v) level |= std::uint32_t{1} << x;
      }
      return first.at(level);
    }));
  }
  return FiniteCapacity(std::move(product), std::move(table));
}

FiniteCapacity tensor_n(std::span<const FiniteCapacity> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tensor product of no factors");
  }
  FiniteCapacity acc = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    acc = tensor2(acc, factors[k]);
  }
  return acc;
}

FiniteCapacity marginal(const CapacityView& capacity, std::size_t factor) {
  const Domain& domain = capacity.domain();
  if (!domain.is_product()) {
    if (factor != 0) {
      throw Error(ErrorCode::kIndex,
                  "factor index " + std::to_string(factor) +
                      " on a domain with a single factor");
    }
    return materialize(capacity);
  }
  if (factor >= domain.factors().size()) {
    throw Error(ErrorCode::kIndex,
                "factor index " + std::to_string(factor) + " out of range (" +
                    std::to_string(domain.factors().size()) + " factors)");
  }
  std::vector<std::size_t> image(domain.size());
  for (std::size_t x = 0; x < domain.size(); ++x) {
    image[x] = domain.tuple_of(x)[factor];
  }
  return pushforward(capacity, domain.factors()[factor], image);
}

LazyTensor::LazyTensor(std::vector<FiniteCapacity> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tensor product of no factors");
  }
  std::vector<Domain> domains;
  std::size_t size = 1;
  for (const auto& f : factors_) {
    domains.push_back(f.domain());
    size *= f.domain().size();
    prefix_size_.push_back(size);
  }
  domain_ = Domain::product(domains);
}

Rational LazyTensor::value(const PointSet& subset) const {
  if (subset.size() != domain_.size()) {
    throw Error(ErrorCode::kDomainMismatch,
                "subset of a different domain passed to a lazy tensor");
  }
  return evaluate(factors_.size() - 1, subset);
}

Rational LazyTensor::evaluate(std::size_t last, const PointSet& subset) const {
  if (subset.none()) return Rational(0);
  if (subset.all()) return Rational(1);
  if (last == 0) return factors_[0].value(subset);

  const FiniteCapacity& inner = factors_[last];
  const std::size_t width = inner.domain().size();
  const std::size_t outer_points = prefix_size_[last - 1];
  std::vector<Rational> sections(outer_points);
  for (std::size_t p = 0; p < outer_points; ++p) {
    std::uint32_t mask = 0;
    for (std::size_t y = 0; y < width; ++y) {
      if (subset.test(p * width + y)) mask |= std::uint32_t{1} << y;
    }
    sections[p] = inner.at(mask);
  }
  return sections_sugeno(sections, [&](const Rational& v) {
    PointSet level(outer_points);
    for (std::size_t p = 0; p < outer_points; ++p) {
      if (sections[p] >= v) level.set(p);
    }
    return evaluate(last - 1, level);
  });
}

CapacityPtr lazy_tensor(std::vector<FiniteCapacity> factors) {
  return std::make_shared<const LazyTensor>(std::move(factors));
}

BracketingDiagnostic compare_bracketings(const FiniteCapacity& a,
                                         const FiniteCapacity& b,
                                         const FiniteCapacity& c) {
  const FiniteCapacity left = tensor2(tensor2(a, b), c);
  const FiniteCapacity right = tensor2(a, tensor2(b, c));
  BracketingDiagnostic out;
  for (std::uint32_t m = 0; m <= left.full_mask(); ++m) {
    ++out.subsets_compared;
    if (left.at(m) != right.at(m)) {
      if (!out.first_discrepancy) out.first_discrepancy = m;
      ++out.discrepancies;
    }
  }
  return out;
}

}  // namespace sugeq
