#include "sugeq/sugeno.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "sugeq/error.hpp"

namespace sugeq {

CorrectionMap::CorrectionMap(std::string id, Function on_open_interval,
                             bool exact)
    : id_(std::move(id)), fn_(std::move(on_open_interval)), exact_(exact) {}

ExtendedValue CorrectionMap::operator()(const Rational& u) const {
  if (u.sign() < 0 || u > Rational(1)) {
    throw Error(ErrorCode::kRange,
                "correction map argument " + u.str() + " outside [0,1]");
  }
  if (u.is_zero()) return ExtendedValue::neg_inf();
  if (u == Rational(1)) return ExtendedValue::pos_inf();
  return fn_(u);
}

CorrectionMap default_psi() {
  // Strictly increasing on (0,1): the derivative has numerator 2u^2 - 2u + 1.
  return CorrectionMap(
      "rational",
      [](const Rational& u) {
        const Rational one(1);
        return (Rational(2) * u - one) / (u * (one - u));
      },
      true);
}

CorrectionMap logit_psi(double scale) {
  if (!(scale > 0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidArgument, "logit scale must be positive");
  }
  std::ostringstream id;
  id << "logit:" << scale;
  return CorrectionMap(
      id.str(),
      [scale](const Rational& u) {
        const double x = u.to_double();
        return Rational::from_double(scale * std::log(x / (1.0 - x)));
      },
      false);
}

CorrectionMap psi_from_id(std::string_view id) {
  if (id == "rational") return default_psi();
  constexpr std::string_view kLogit = "logit:";
  if (id.starts_with(kLogit)) {
    const std::string text(id.substr(kLogit.size()));
    std::size_t used = 0;
    double scale = 0;
    try {
      scale = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad logit scale in \"" + std::string(id) + "\"");
    }
    return logit_psi(scale);
  }
  if (id == "logit") return logit_psi(1.0);
  throw Error(ErrorCode::kInvalidArgument,
              "unknown correction map \"" + std::string(id) +
                  "\" (expected rational or logit:<scale>)");
}

PayoffFunction::PayoffFunction(Domain domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size() || values_.empty()) {
    throw Error(ErrorCode::kValidation,
                "payoff function must assign a value to every point");
  }
}

const Rational& PayoffFunction::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

const Rational& PayoffFunction::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

std::vector<Rational> PayoffFunction::distinct_values() const {
  std::vector<Rational> v = values_;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

PointSet PayoffFunction::at_least(const Rational& threshold) const {
  PointSet set(values_.size());
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] >= threshold) set.set(x);
  }
  return set;
}

Rational sugeno_integral(const PayoffFunction& f, const CapacityView& mu,
                         const CorrectionMap& psi) {
  require_same_domain(f.domain(), mu.domain(), "sugeno_integral");
  // The smallest value has level set X and psi(1) = +inf, so it always
  // contributes itself and the maximum stays finite.
  std::optional<Rational> best;
  for (const auto& v : f.distinct_values()) {
    const ExtendedValue candidate = min(v, psi(mu.value(f.at_least(v))));
    if (!candidate.is_finite()) continue;
    if (!best || candidate.finite() > *best) best = candidate.finite();
  }
  return *best;
}

namespace {

// Decides c >= psi^-1(t) for c in (0,1). Brackets the root with
// psi(lo) < t <= psi(hi) and halves until hi - lo <= resolution; if c is still
// strictly inside the bracket the halving continues until it is not.
bool level_reaches_inverse(const Rational& c, const Rational& t,
                           const CorrectionMap& psi,
                           const Rational& resolution) {
  Rational lo(0);
  Rational hi(1);
  const ExtendedValue target(t);
  const Rational half(1, 2);
  constexpr int kMaxRefinements = 256;
  int refinements = 0;
  while (true) {
    const bool narrow = hi - lo <= resolution;
    if (narrow) {
      if (c >= hi) return true;
      if (c <= lo) return false;
      if (++refinements > kMaxRefinements) return true;
    }
    const Rational mid = (lo + hi) * half;
    if (psi(mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace

Rational sugeno_oracle(const PayoffFunction& f, const CapacityView& mu,
                       const CorrectionMap& psi, const Rational& resolution,
                       OracleScan scan) {
  require_same_domain(f.domain(), mu.domain(), "sugeno_oracle");
  if (resolution.sign() <= 0) {
    throw Error(ErrorCode::kBadResolution,
                "oracle resolution must be positive, got " + resolution.str());
  }
  auto passes = [&](const Rational& t) {
    const Rational c = mu.value(f.at_least(t));
    if (c.is_zero()) return false;  // psi^-1(t) > 0 for finite t
    if (c == Rational(1)) return true;
    return level_reaches_inverse(c, t, psi, resolution);
  };

  const Rational start = f.min() - Rational(1);
  const Rational stop = f.max() + Rational(1);
  const mpz_class steps_z = [&] {
    const mpq_class span = (stop - start).raw() / resolution.raw();
    mpz_class floor_steps;
    mpz_fdiv_q(floor_steps.get_mpz_t(), span.get_num_mpz_t(),
               span.get_den_mpz_t());
    return floor_steps;
  }();
  if (!steps_z.fits_slong_p() || steps_z > 100'000'000) {
    throw Error(ErrorCode::kBadResolution,
                "oracle grid would exceed 10^8 points");
  }
  const long steps = steps_z.get_si();
  auto grid_point = [&](long k) { return start + Rational(k) * resolution; };

  // grid_point(0) = min f - 1 has level set X, so it always passes.
  long best_k = 0;
  if (scan == OracleScan::kLinear) {
    for (long k = steps; k >= 0; --k) {
      if (passes(grid_point(k))) {
        best_k = k;
        break;
      }
    }
  } else {
    long lo = 0;
    long hi = steps;
    while (lo < hi) {
      const long mid = lo + (hi - lo + 1) / 2;
      if (passes(grid_point(mid))) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    best_k = lo;
  }
  Rational best = grid_point(best_k);
  for (const auto& v : f.distinct_values()) {
    if (v > best && passes(v)) best = v;
  }
  return best;
}

Rational classical_sugeno(std::span<const Rational> g, const CapacityView& mu) {
  const std::size_t n = mu.domain().size();
  if (g.size() != n) {
    throw Error(ErrorCode::kDomainMismatch,
                "integrand and capacity have different domains");
  }
  const Rational zero(0);
  const Rational one(1);
  for (const auto& v : g) {
    if (v < zero || v > one) {
      throw Error(ErrorCode::kRange,
                  "classical Sugeno integrand value " + v.str() +
                      " outside [0,1]");
    }
  }
  std::vector<Rational> values(g.begin(), g.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Rational best(0);
  // Descending: once v <= best no smaller value can improve.
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    const Rational& v = *it;
    if (v <= best) break;
    PointSet level(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (g[x] >= v) level.set(x);
    }
    best = max(best, min(v, mu.value(level)));
  }
  return best;
}

}  // namespace sugeq
