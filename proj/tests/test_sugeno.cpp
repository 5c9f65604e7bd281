#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace testing;

TEST_CASE("default correction map") {
  const CorrectionMap psi = default_psi();
  CHECK(psi.id() == "rational");
  CHECK(psi(q(1, 2)) == ExtendedValue(q(0)));
  CHECK(psi(q(1)).is_pos_inf());
  CHECK(psi(q(0)).is_neg_inf());
  CHECK(psi(q(2, 3)) == ExtendedValue(q(3, 2)));
  CHECK(psi(q(1, 3)) == ExtendedValue(q(-3, 2)));
  CHECK(error_code_of([&] { psi(q(-1, 10)); }) == ErrorCode::kRange);
  CHECK(error_code_of([&] { psi(q(11, 10)); }) == ErrorCode::kRange);

  // Strictly increasing on the 1/100 grid.
  for (long k = 1; k < 99; ++k) {
    CHECK(psi(q(k, 100)) < psi(q(k + 1, 100)));
  }
}

TEST_CASE("correction map selection") {
  CHECK(psi_from_id("rational").id() == "rational");
  CHECK(psi_from_id("logit:2").id() == "logit:2");
  CHECK_FALSE(psi_from_id("logit:2").exact());
  CHECK(psi_from_id("logit:1")(q(1, 2)) == ExtendedValue(q(0)));
  CHECK(error_code_of([] { psi_from_id("tanh"); }) == ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { psi_from_id("logit:-1"); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_code_of([] { psi_from_id("logit:abc"); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("closed form examples") {
  const CorrectionMap psi = default_psi();
  const Domain ab = dom({"a", "b"});
  InstanceGenerator gen(2);

  SUBCASE("constant payoff") {
    for (int trial = 0; trial < 10; ++trial) {
      const auto mu = gen.capacity(ab, 5);
      const PayoffFunction f(ab, {q(5), q(5)});
      CHECK(sugeno_integral(f, mu, psi) == q(5));
    }
  }
  SUBCASE("dirac capacity picks the point value") {
    const Domain d = dom({"a", "b", "c"});
    const PayoffFunction f(d, {q(-7, 2), q(4), q(1, 3)});
    CHECK(sugeno_integral(f, dirac(d, "a"), psi) == q(-7, 2));
    CHECK(sugeno_integral(f, dirac(d, "b"), psi) == q(4));
    CHECK(sugeno_integral(f, dirac(d, "c"), psi) == q(1, 3));
    // Independent of the correction map.
    CHECK(sugeno_integral(f, dirac(d, "b"), logit_psi(3)) == q(4));
  }
  SUBCASE("uniform on two points") {
    const auto uniform = from_probability(ab, std::vector{q(1, 2), q(1, 2)});
    const PayoffFunction f(ab, {q(-1), q(1)});
    // max(min(-1, +inf), min(1, psi(1/2))) = max(-1, 0)
    CHECK(sugeno_integral(f, uniform, psi) == q(0));
    CHECK(candidate_sup(f, uniform, psi) == q(0));
    const Rational oracle = sugeno_oracle(f, uniform, psi, q(1, 1000));
    CHECK(oracle <= q(0));
    CHECK(oracle >= q(-1, 1000));
  }
  SUBCASE("possibility and necessity beliefs") {
    const Domain d = dom({"a", "b", "c"});
    const PayoffFunction f(d, {q(3), q(-2), q(1)});
    CHECK(sugeno_integral(f, possibility(d, d.subset({"b", "c"})), psi) == q(1));
    CHECK(sugeno_integral(f, necessity(d, d.subset({"a", "c"})), psi) == q(1));
    CHECK(sugeno_integral(f, top_capacity(d), psi) == q(3));
    CHECK(sugeno_integral(f, bottom_capacity(d), psi) == q(-2));
  }
  SUBCASE("domain mismatch") {
    const PayoffFunction f(ab, {q(0), q(1)});
    CHECK(error_code_of([&] {
            sugeno_integral(f, top_capacity(dom({"a", "c"})), psi);
          }) == ErrorCode::kDomainMismatch);
  }
}

TEST_CASE("oracle examples") {
  const CorrectionMap psi = default_psi();
  const Domain d = dom({"a", "b", "c"});
  const PayoffFunction f(d, {q(2), q(-1), q(1, 2)});
  const Rational r(1, 1000);
  const Rational at_b = sugeno_oracle(f, dirac(d, "b"), psi, r);
  CHECK(at_b <= q(-1));
  CHECK(at_b >= q(-1) - r);
  const PayoffFunction five(d, {q(5), q(5), q(5)});
  const Rational v = sugeno_oracle(five, top_capacity(d), psi, r);
  CHECK(v <= q(5));
  CHECK(v >= q(5) - r);
  CHECK(error_code_of([&] { sugeno_oracle(f, top_capacity(d), psi, q(0)); }) ==
        ErrorCode::kBadResolution);
  CHECK(error_code_of([&] {
          sugeno_oracle(f, top_capacity(d), psi, q(1, 1000000000));
        }) == ErrorCode::kBadResolution);
}

TEST_CASE("closed form agrees with the candidate-point oracle") {
  InstanceGenerator gen(101);
  const std::vector<CorrectionMap> maps{default_psi(), logit_psi(1),
                                        logit_psi(1.0 / 3)};
  for (int trial = 0; trial < 400; ++trial) {
    const Domain d = labeled_domain("x", 1 + gen.pick(6));
    const auto mu = gen.capacity(d, 1 + static_cast<long>(gen.pick(12)));
    const auto f = gen.payoff(d, -3, 3, 1 + static_cast<long>(gen.pick(6)));
    const auto& psi = maps[trial % maps.size()];
    CHECK(sugeno_integral(f, mu, psi) == candidate_sup(f, mu, psi));
  }
}

TEST_CASE("bisection and linear oracle scans agree") {
  InstanceGenerator gen(17);
  const CorrectionMap psi = default_psi();
  for (int trial = 0; trial < 40; ++trial) {
    const Domain d = labeled_domain("x", 1 + gen.pick(4));
    const auto mu = gen.capacity(d, 6);
    const auto f = gen.payoff(d, -2, 2, 2);
    const Rational r(1, 50);
    CHECK(sugeno_oracle(f, mu, psi, r, OracleScan::kBisect) ==
          sugeno_oracle(f, mu, psi, r, OracleScan::kLinear));
  }
}

TEST_CASE("integral properties") {
  InstanceGenerator gen(23);
  const CorrectionMap psi = default_psi();
  for (int trial = 0; trial < 200; ++trial) {
    const Domain d = labeled_domain("x", 1 + gen.pick(5));
    const auto mu = gen.capacity(d, 8);
    const auto f = gen.payoff(d, -4, 4, 3);
    const Rational v = sugeno_integral(f, mu, psi);

    // bounds
    CHECK(f.min() <= v);
    CHECK(v <= f.max());

    // monotone in the integrand
    std::vector<Rational> raised(f.values().begin(), f.values().end());
    for (auto& x : raised) x += q(static_cast<long>(gen.pick(3)), 2);
    CHECK(v <= sugeno_integral(PayoffFunction(d, raised), mu, psi));

    // monotone in the capacity
    const auto larger = join(mu, gen.capacity(d, 8));
    CHECK(v <= sugeno_integral(f, larger, psi));

    // dirac capacities ignore psi
    const std::size_t x = gen.pick(d.size());
    CHECK(sugeno_integral(f, dirac(d, d.label(x)), logit_psi(2)) == f[x]);
  }
}

TEST_CASE("classical Sugeno integral") {
  const Domain d = dom({"a", "b", "c"});
  InstanceGenerator gen(9);
  SUBCASE("examples") {
    const auto mu = gen.capacity(d, 7);
    CHECK(classical_sugeno(std::vector{q(1), q(1), q(1)}, mu) == q(1));
    for (std::uint32_t s = 0; s < 8; ++s) {
      std::vector<Rational> g(3, q(0));
      for (std::size_t x = 0; x < 3; ++x) {
        if ((s >> x) & 1u) g[x] = q(1);
      }
      CHECK(classical_sugeno(g, mu) == mu.at(s));
    }
    const std::vector g{q(1, 5), q(3, 5), q(1)};
    CHECK(classical_sugeno(g, dirac(d, "b")) == q(3, 5));
  }
  SUBCASE("agrees with the subset formula") {
    for (int trial = 0; trial < 200; ++trial) {
      const Domain e = labeled_domain("x", 1 + gen.pick(6));
      const auto mu = gen.capacity(e, 6);
      std::vector<Rational> g(e.size());
      for (auto& v : g) v = q(static_cast<long>(gen.pick(7)), 6);
      CHECK(classical_sugeno(g, mu) == subset_sugeno(g, mu));
    }
  }
  SUBCASE("rejects values outside [0,1]") {
    CHECK(error_code_of([&] {
            classical_sugeno(std::vector{q(2), q(0), q(0)}, top_capacity(d));
          }) == ErrorCode::kRange);
  }
}
