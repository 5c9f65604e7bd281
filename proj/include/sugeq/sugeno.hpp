#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sugeq/capacity.hpp"
#include "sugeq/domain.hpp"
#include "sugeq/rational.hpp"

namespace sugeq {

// Increasing homeomorphism (0,1) -> R with psi(0) = -inf and psi(1) = +inf.
// The wrapped function is only ever called on the open interval.
class CorrectionMap {
 public:
  using Function = std::function<Rational(const Rational&)>;

  CorrectionMap(std::string id, Function on_open_interval, bool exact);

  // u must lie in [0,1]; throws kRange otherwise.
  ExtendedValue operator()(const Rational& u) const;

  const std::string& id() const { return id_; }
  // False for float-backed maps.
  bool exact() const { return exact_; }

 private:
  std::string id_;
  Function fn_;
  bool exact_;
};

// psi(u) = (2u - 1) / (u (1 - u)); id "rational".
CorrectionMap default_psi();
// psi(u) = scale * log(u / (1 - u)) evaluated in double and converted exactly;
// id "logit:<scale>".
CorrectionMap logit_psi(double scale);
// Accepts "rational" or "logit:<scale>"; throws kInvalidArgument.
CorrectionMap psi_from_id(std::string_view id);

class PayoffFunction {
 public:
  PayoffFunction() = default;
  PayoffFunction(Domain domain, std::vector<Rational> values);

  const Domain& domain() const { return domain_; }
  const Rational& operator[](std::size_t point) const { return values_[point]; }
  std::span<const Rational> values() const { return values_; }

  const Rational& min() const;
  const Rational& max() const;
  // Distinct values, ascending.
  std::vector<Rational> distinct_values() const;
  // {x : f(x) >= t}
  PointSet at_least(const Rational& threshold) const;

 private:
  Domain domain_;
  std::vector<Rational> values_;
};

// max over distinct values v of min(v, psi(mu(f >= v))).
Rational sugeno_integral(const PayoffFunction& f, const CapacityView& mu,
                         const CorrectionMap& psi);

enum class OracleScan {
  // The acceptance predicate is downward closed in t, so the largest passing
  // grid point is located by binary search over the grid.
  kBisect,
  // Every grid point is tested from the top down.
  kLinear,
};

// Direct evaluation of max{t : mu(f >= t) >= psi^-1(t)} over the grid
// min f - 1 + k * resolution (up to max f + 1) together with the payoff
// values; psi^-1 is found by exact bisection on (0,1).
Rational sugeno_oracle(const PayoffFunction& f, const CapacityView& mu,
                       const CorrectionMap& psi, const Rational& resolution,
                       OracleScan scan = OracleScan::kBisect);

// Original Sugeno integral of g with values in [0,1], indexed by the points of
// mu's domain: max over values v of min(v, mu(g >= v)).
Rational classical_sugeno(std::span<const Rational> g, const CapacityView& mu);

}  // namespace sugeq
