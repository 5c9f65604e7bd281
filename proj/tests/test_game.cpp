#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace testing;

TEST_CASE("game construction") {
  const GameSpec g = coordination();
  CHECK(g.players() == 2);
  CHECK(g.profile_count() == 4);
  CHECK(g.opponent_domain(0).labels() == std::vector<std::string>{"A", "B"});
  const std::vector<std::size_t> ab{0, 1};
  CHECK(g.payoff(0, ab) == q(0));
  CHECK(g.profile_of(g.profile_index(ab)) == ab);

  CHECK(error_code_of([] {
          GameSpec({dom({"a"})}, {{q(1)}});
        }) == ErrorCode::kValidation);
  CHECK(error_code_of([] {
          GameSpec({dom({"a", "b"}), dom({"c"})}, {{q(1), q(2)}, {q(0)}});
        }) == ErrorCode::kValidation);
  CHECK(error_code_of([&] { g.strategies(2); }) == ErrorCode::kIndex);
  const std::vector<std::size_t> bad{0, 2};
  CHECK(error_code_of([&] { g.profile_index(bad); }) == ErrorCode::kIndex);

  SUBCASE("three players index round trip") {
    InstanceGenerator gen(1);
    const GameSpec h = gen.game({2, 3, 2}, default_payoff_values());
    CHECK(h.opponent_domain(1).labels() ==
          std::vector<std::string>{"s0|s0", "s0|s1", "s1|s0", "s1|s1"});
    for (std::size_t k = 0; k < h.profile_count(); ++k) {
      CHECK(h.profile_index(h.profile_of(k)) == k);
    }
    // opponent index 2 of player 1 is (s1, s0); with own = s2 that is (1,2,0)
    CHECK(h.profile(1, 2, 2) == std::vector<std::size_t>{1, 2, 0});
  }
}

TEST_CASE("payoff slices") {
  const auto coord = payoff_slice(coordination(), 0, 0);
  CHECK(coord[0] == q(1));
  CHECK(coord[1] == q(0));
  const auto pennies = payoff_slice(matching_pennies(), 0, 0);
  CHECK(pennies[0] == q(1));
  CHECK(pennies[1] == q(-1));
  const GameSpec constant = two_player({"a", "b"}, {"c", "d", "e"},
                                       std::vector<Rational>(6, q(3)),
                                       std::vector<Rational>(6, q(3)));
  const auto c = payoff_slice(constant, 1, 2);
  CHECK(c.min() == q(3));
  CHECK(c.max() == q(3));
}

TEST_CASE("expected payoffs") {
  const GameSpec g = coordination();
  const Domain& opp = g.opponent_domain(0);
  const CorrectionMap psi = default_psi();
  CHECK(expected_payoff(g, 0, 0, dirac(opp, "A"), psi) == q(1));
  CHECK(expected_payoff(g, 0, 0, dirac(opp, "B"), psi) == q(0));
  CHECK(expected_payoff(g, 0, 0, top_capacity(opp), psi) == q(1));
  CHECK(expected_payoff(g, 0, 1, top_capacity(opp), psi) == q(1));
  const auto uniform = from_probability(opp, std::vector{q(1, 2), q(1, 2)});
  // max(min(0, +inf), min(1, psi(1/2))) = 0
  CHECK(expected_payoff(g, 0, 0, uniform, psi) == q(0));
  CHECK(error_code_of([&] {
          expected_payoff(g, 0, 0, top_capacity(dom({"x", "y"})), psi);
        }) == ErrorCode::kDomainMismatch);
}

TEST_CASE("best responses") {
  const GameSpec g = coordination();
  const Domain& opp = g.opponent_domain(1);
  const CorrectionMap psi = default_psi();
  CHECK(members(best_response(g, 1, dirac(opp, "A"), psi)) == std::set<std::size_t>{0});
  CHECK(members(best_response(g, 1, top_capacity(opp), psi)) ==
        std::set<std::size_t>{0, 1});
  const GameSpec single = two_player({"only"}, {"l", "r"}, {q(1), q(2)},
                                     {q(0), q(5)});
  CHECK(members(best_response(single, 0, top_capacity(single.opponent_domain(0)),
                              psi)) == std::set<std::size_t>{0});
}

TEST_CASE("best response properties on random games") {
  InstanceGenerator gen(41);
  const CorrectionMap psi = default_psi();
  for (int trial = 0; trial < 60; ++trial) {
    const GameSpec g = gen.small_game(default_payoff_values());
    for (std::size_t i = 0; i < g.players(); ++i) {
      const Domain& opp = g.opponent_domain(i);
      const auto belief = gen.capacity(opp, 4);
      const auto r = best_response(g, i, belief, psi);
      CHECK(r.any());
      CHECK(members(r) == reference_best_response(g, i, belief, psi));
      for (std::size_t x = 0; x < g.strategies(i).size(); ++x) {
        const auto slice = payoff_slice(g, i, x);
        const Rational v = expected_payoff(g, i, x, belief, psi);
        CHECK(slice.min() <= v);
        CHECK(v <= slice.max());
      }

      // Dirac beliefs reduce to classical best responses.
      const std::size_t k = gen.pick(opp.size());
      std::set<std::size_t> classical;
      Rational best = g.payoff(i, g.profile(i, 0, k));
      for (std::size_t x = 0; x < g.strategies(i).size(); ++x) {
        best = max(best, g.payoff(i, g.profile(i, x, k)));
      }
      for (std::size_t x = 0; x < g.strategies(i).size(); ++x) {
        if (g.payoff(i, g.profile(i, x, k)) == best) classical.insert(x);
      }
      CHECK(members(best_response(g, i, dirac(opp, opp.label(k)), psi)) ==
            classical);
    }
  }
}

TEST_CASE("relabeling strategies permutes best responses") {
  InstanceGenerator gen(43);
  const CorrectionMap psi = default_psi();
  for (int trial = 0; trial < 30; ++trial) {
    const GameSpec g = gen.game({3, 2}, default_payoff_values());
    // Reverse player 0's strategies.
    const std::vector<std::size_t> perm{2, 1, 0};
    std::vector<std::vector<Rational>> payoffs(2);
    for (std::size_t p = 0; p < 2; ++p) {
      for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
          const std::vector<std::size_t> profile{perm[x], y};
          payoffs[p].push_back(g.payoff(p, profile));
        }
      }
    }
    const GameSpec h({Domain({"t2", "t1", "t0"}), g.strategies(1)}, payoffs);
    const auto belief = gen.capacity(g.opponent_domain(0), 3);
    const auto r = best_response(g, 0, belief, psi);
    const auto s = best_response(h, 0, belief, psi);
    for (std::size_t x = 0; x < 3; ++x) CHECK(s.test(x) == r.test(perm[x]));
  }
}
