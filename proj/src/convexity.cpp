#include "sugeq/convexity.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "sugeq/error.hpp"

namespace sugeq {

namespace {

// Fixed-width bit rows, cheaper than dynamic_bitset for the pair scans.
class BitRows {
 public:
  BitRows(std::size_t rows, std::size_t bits)
      : words_((bits + 63) / 64), data_(rows * words_, 0) {}

  std::size_t words() const { return words_; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const {
    return data_.data() + r * words_;
  }
  void set(std::size_t r, std::size_t bit) {
    row(r)[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

bool any_common(const std::uint64_t* a, const std::uint64_t* b,
                std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

// Bits strictly above `bit` in word w.
std::uint64_t above_mask(std::size_t w, std::size_t bit) {
  const std::size_t first = bit + 1;
  if (first >= (w + 1) * 64) return 0;
  if (first <= w * 64) return ~std::uint64_t{0};
  return ~std::uint64_t{0} << (first - w * 64);
}

// leq[a * n + b] = capacities[a] <= capacities[b] pointwise.
std::vector<char> order_table(const std::vector<FiniteCapacity>& caps) {
  const std::size_t n = caps.size();
  std::vector<char> table(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = leq(caps[a], caps[b]);
  }
  return table;
}

}  // namespace

CapacityInterval::CapacityInterval(const FiniteCapacity& first,
                                   const FiniteCapacity& second)
    : lo_(meet(first, second)), hi_(join(first, second)) {}

bool interval_membership(const CapacityInterval& interval,
                         const FiniteCapacity& alpha) {
  require_same_domain(interval.lo().domain(), alpha.domain(),
                      "interval_membership");
  return leq(interval.lo(), alpha) && leq(alpha, interval.hi());
}

GridCapacitySpace enumerate_capacities(const Domain& domain,
                                       std::vector<Rational> grid) {
  if (domain.size() > 4 || grid.size() > 5) {
    throw Error(ErrorCode::kBudgetExceeded,
                "capacity enumeration is limited to 4 points and 5 grid values");
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty() || grid.front() != Rational(0) || grid.back() != Rational(1)) {
    throw Error(ErrorCode::kRange,
                "grid must lie in [0,1] and contain both 0 and 1");
  }
  GridCapacitySpace space{domain, grid, {}};
  const std::size_t n = domain.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<Rational> table(full + 1, Rational(0));
  table[full] = Rational(1);
  if (n == 1) {
    space.capacities.emplace_back(domain, table);
    return space;
  }

  // Depth-first over masks 1..full-1; every proper subset of a mask is
  // numerically smaller, so its value is already fixed.
  auto recurse = [&](auto&& self, std::uint32_t mask) -> void {
    if (mask == full) {
      space.capacities.emplace_back(domain, table);
      return;
    }
    Rational floor(0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (mask & bit) floor = max(floor, table[mask ^ bit]);
    }
    for (const auto& v : grid) {
      if (v < floor) continue;
      table[mask] = v;
      self(self, mask + 1);
    }
  };
  recurse(recurse, 1);
  return space;
}

BinarityReport check_binarity(const GridCapacitySpace& space,
                              const BinarityOptions& options) {
  const auto& caps = space.capacities;
  const std::size_t n = caps.size();
  const auto order = order_table(caps);

  // Distinct intervals are the comparable pairs lo <= hi of the space.
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  for (std::size_t lo = 0; lo < n; ++lo) {
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (order[lo * n + hi]) intervals.emplace_back(lo, hi);
    }
  }
  const std::size_t m = intervals.size();
  if (m > options.max_intervals) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(m) + " intervals exceed the binarity budget of " +
                    std::to_string(options.max_intervals));
  }

  BinarityReport report;
  report.capacities = n;
  report.intervals = m;

  // members[I] over capacities, by explicit membership.
  BitRows members(m, n);
  for (std::size_t k = 0; k < m; ++k) {
    const auto [lo, hi] = intervals[k];
    for (std::size_t a = 0; a < n; ++a) {
      if (order[lo * n + a] && order[a * n + hi]) members.set(k, a);
    }
  }
  // meets[I] over intervals: I ∩ J contains a capacity of the space.
  BitRows meets(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (any_common(members.row(i), members.row(j), members.words())) {
        meets.set(i, j);
      }
    }
  }

  // For a linked pair the third interval must meet the pair's common part.
  // Those sets are cached per distinct common part.
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> cache;
  std::vector<std::uint64_t> common(members.words());
  const std::size_t mw = meets.words();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!((meets.row(i)[j / 64] >> (j % 64)) & 1u)) continue;
      ++report.linked_pairs;
      for (std::size_t w = 0; w < common.size(); ++w) {
        common[w] = members.row(i)[w] & members.row(j)[w];
      }
      auto it = cache.find(common);
      if (it == cache.end()) {
        std::vector<std::uint64_t> hits(mw, 0);
        for (std::size_t k = 0; k < m; ++k) {
          if (any_common(common.data(), members.row(k), common.size())) {
            hits[k / 64] |= std::uint64_t{1} << (k % 64);
          }
        }
        it = cache.emplace(common, std::move(hits)).first;
      }
      const auto& hits = it->second;
      for (std::size_t w = 0; w < mw; ++w) {
        const std::uint64_t linked =
            meets.row(i)[w] & meets.row(j)[w] & above_mask(w, j);
        if (!linked) continue;
        report.linked_triples += std::popcount(linked);
        const std::uint64_t bad = linked & ~hits[w];
        if (bad) {
          if (!report.counterexample) {
            report.counterexample = std::array<std::size_t, 3>{
                i, j, w * 64 + std::countr_zero(bad)};
          }
          report.failures += std::popcount(bad);
        }
      }
    }
  }

  if (options.full_linked_families) {
    if (m > 20) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "full linked-family check needs at most 20 intervals, space "
                  "has " + std::to_string(m));
    }
    report.full_families_checked = true;
    const std::uint32_t families = std::uint32_t{1} << m;
    std::vector<std::uint64_t> acc(members.words());
    for (std::uint32_t f = 1; f < families; ++f) {
      bool linked = true;
      for (std::size_t i = 0; i < m && linked; ++i) {
        if (!((f >> i) & 1u)) continue;
        for (std::size_t j = i + 1; j < m && linked; ++j) {
          if ((f >> j) & 1u) linked = (meets.row(i)[j / 64] >> (j % 64)) & 1u;
        }
      }
      if (!linked) continue;
      ++report.linked_families;
      std::fill(acc.begin(), acc.end(), ~std::uint64_t{0});
      for (std::size_t i = 0; i < m; ++i) {
        if (!((f >> i) & 1u)) continue;
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= members.row(i)[w];
      }
      const bool empty =
          std::all_of(acc.begin(), acc.end(), [](auto w) { return w == 0; });
      if (empty) ++report.family_failures;
    }
  }
  return report;
}

SeparatingHalves separating_halves(const FiniteCapacity& first,
                                   const FiniteCapacity& second) {
  require_same_domain(first.domain(), second.domain(), "separating_halves");
  const std::uint32_t full = first.full_mask();
  std::uint32_t witness = 0;
  while (witness <= full && first.at(witness) == second.at(witness)) ++witness;
  if (witness > full) {
    throw Error(ErrorCode::kEqualCapacities,
                "separating halves need distinct capacities");
  }
  const bool first_is_low = first.at(witness) < second.at(witness);
  const Rational level = (first.at(witness) + second.at(witness)) / Rational(2);
  const Domain& domain = first.domain();

  // ν1: a on proper supersets of A, 1 on X, 0 elsewhere.
  std::vector<Rational> upper(full + 1, Rational(0));
  // ν2: a on nonempty subsets of A, 1 on sets leaving A, 0 on ∅.
  std::vector<Rational> lower(full + 1, Rational(0));
  for (std::uint32_t c = 0; c <= full; ++c) {
    if (c == full) {
      upper[c] = Rational(1);
    } else if ((c & witness) == witness) {
      upper[c] = level;
    }
    if (c == 0) continue;
    lower[c] = (c & ~witness) ? Rational(1) : level;
  }
  const FiniteCapacity nu1(domain, std::move(upper));
  const FiniteCapacity nu2(domain, std::move(lower));
  CapacityInterval upper_half(nu1, top_capacity(domain));
  CapacityInterval lower_half(bottom_capacity(domain), nu2);

  return SeparatingHalves{
      make_set(domain.size(), witness), level,
      first_is_low ? lower_half : upper_half,
      first_is_low ? upper_half : lower_half};
}

T2Report check_t2(const GridCapacitySpace& space) {
  const auto& caps = space.capacities;
  T2Report report;
  report.capacities = caps.size();
  for (std::size_t p = 0; p < caps.size(); ++p) {
    for (std::size_t q = p + 1; q < caps.size(); ++q) {
      ++report.pairs;
      const SeparatingHalves h = separating_halves(caps[p], caps[q]);
      const std::uint32_t a = static_cast<std::uint32_t>(mask_of(h.witness));
      const bool first_is_low = caps[p].at(a) < caps[q].at(a);
      const CapacityInterval& upper = first_is_low ? h.second_half : h.first_half;
      const CapacityInterval& lower = first_is_low ? h.first_half : h.second_half;

      bool ok = interval_membership(h.first_half, caps[p]) &&
                !interval_membership(h.first_half, caps[q]) &&
                interval_membership(h.second_half, caps[q]) &&
                !interval_membership(h.second_half, caps[p]);
      for (const auto& alpha : caps) {
        const bool in_upper = interval_membership(upper, alpha);
        const bool in_lower = interval_membership(lower, alpha);
        if (!in_upper && !in_lower) ok = false;
        if (in_upper != (alpha.at(a) >= h.level) ||
            in_lower != (alpha.at(a) <= h.level)) {
          ++report.half_identity_failures;
        }
      }
      if (!ok) {
        ++report.failures;
        if (!report.counterexample) report.counterexample = std::pair{p, q};
      }
    }
  }
  return report;
}

}  // namespace sugeq
