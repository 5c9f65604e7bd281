#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sugeq/report.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::filesystem::path data(const char* name) {
  return std::filesystem::path(SUGEQ_TEST_DATA) / name;
}

std::string error_message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("rationals in JSON") {
  CHECK(rational_from_json(Json("3/6")) == q(1, 2));
  CHECK(rational_from_json(Json(-4)) == q(-4));
  CHECK(rational_from_json(Json("-7")) == q(-7));
  CHECK(rational_to_json(q(2, 4)) == Json("1/2"));
  CHECK(rational_to_json(q(3)) == Json("3"));
  CHECK(error_code_of([] { rational_from_json(Json("1/0")); }) == ErrorCode::kParse);
  CHECK(error_code_of([] { rational_from_json(Json(0.5)); }) == ErrorCode::kParse);
  CHECK(error_code_of([] { rational_from_json(Json("0.25")); }) == ErrorCode::kParse);
  CHECK(error_code_of([] { rational_from_json(Json(true)); }) == ErrorCode::kParse);
  CHECK(rational_from_json(Json(0.5), true) == q(1, 2));
  CHECK(rational_from_json(Json("0.125"), true) == q(1, 8));
  CHECK(rational_from_json(Json(0.1), true) == q(1, 10));
}

TEST_CASE("capacity files") {
  const auto mu = load_capacity(data("capacity_ab.json"));
  CHECK(mu.domain().labels() == std::vector<std::string>{"a", "b"});
  CHECK(mu.at(1) == q(1, 3));
  CHECK(mu.at(2) == q(1, 2));
  CHECK(capacity_from_json(capacity_to_json(mu)) == mu);

  const auto nu = load_capacity(data("capacity_xyz.json"));
  CHECK(capacity_from_json(capacity_to_json(nu)) == nu);
  CHECK(subset_key(nu.domain(), nu.domain().subset({"z", "x"})) == "x,z");
  CHECK(subset_key(nu.domain(), nu.domain().empty_set()) == "");

  // Keys may list labels in any order.
  const auto shuffled = parse_capacity(
      R"({"domain":["a","b"],"values":{"b,a":"1","":"0","b":"1/2","a":"1/3"}})");
  CHECK(shuffled == mu);

  CHECK(error_code_of([&] { load_capacity(data("bad_zero_denominator.json")); }) ==
        ErrorCode::kParse);
  const auto missing = error_message_of([&] {
    load_capacity(data("bad_missing_subset.json"));
  });
  CHECK(missing.find("{b}") != std::string::npos);
  CHECK(error_code_of([&] { load_capacity(data("bad_missing_subset.json")); }) ==
        ErrorCode::kValidation);
  CHECK(error_code_of([&] { load_capacity(data("bad_monotonicity.json")); }) ==
        ErrorCode::kMonotonicity);
  CHECK(error_message_of([&] { load_capacity(data("bad_monotonicity.json")); })
            .find("monoton") != std::string::npos);
  CHECK(error_code_of([] {
          parse_capacity(R"({"domain":["a"],"values":{"":"0","q":"1"}})");
        }) == ErrorCode::kValidation);
  CHECK(error_code_of([] {
          parse_capacity(R"({"domain":["a","b"],"values":{"":"0","a":"0","b":"0","a,b":"1","b,a":"1"}})");
        }) == ErrorCode::kValidation);
  CHECK(error_code_of([] { parse_capacity("[1,2"); }) == ErrorCode::kParse);
  CHECK(error_code_of([&] { load_capacity(data("does_not_exist.json")); }) ==
        ErrorCode::kIo);

  SUBCASE("random round trips") {
    InstanceGenerator gen(4);
    for (int trial = 0; trial < 50; ++trial) {
      const auto c = gen.capacity(labeled_domain("p", 1 + gen.pick(5)), 9);
      CHECK(parse_capacity(capacity_to_json(c).dump()) == c);
    }
  }
  SUBCASE("product capacities keep their factors") {
    const auto t = tensor2(mu, dirac(dom({"u", "v"}), "v"));
    const Json j = capacity_to_json(t);
    REQUIRE(j.contains("factors"));
    const auto back = capacity_from_json(j);
    CHECK(back == t);
    CHECK(back.domain().factors().size() == 2);
  }
}

TEST_CASE("game files") {
  const GameSpec g = load_game(data("coordination.json"));
  CHECK(g.players() == 2);
  CHECK(g.payoff(0, std::vector<std::size_t>{1, 1}) == q(1));
  CHECK(g.payoff(1, std::vector<std::size_t>{0, 1}) == q(0));
  CHECK(game_hash(g) == game_hash(coordination()));

  const GameSpec three = load_game(data("three_player.json"));
  CHECK(three.players() == 3);
  CHECK(three.payoff(0, std::vector<std::size_t>{1, 0, 0}) == q(1, 2));
  CHECK(three.payoff(1, std::vector<std::size_t>{1, 1, 1}) == q(3, 2));
  CHECK(parse_game(game_to_json(three).dump()).payoff(2, std::vector<std::size_t>{1, 0, 1}) ==
        q(2));
  CHECK(game_hash(parse_game(game_to_json(three).dump())) == game_hash(three));
  CHECK(game_hash(three).size() == 16);
  CHECK(game_hash(three) != game_hash(g));

  CHECK(error_code_of([&] { load_game(data("decimal_game.json")); }) ==
        ErrorCode::kParse);
  const GameSpec dec = load_game(data("decimal_game.json"), true);
  CHECK(dec.payoff(0, std::vector<std::size_t>{0, 0}) == q(1, 4));
  CHECK(error_code_of([&] { load_game(data("bad_syntax.json")); }) == ErrorCode::kParse);
  CHECK(error_code_of([] {
          parse_game(R"({"players":2,"strategies":[["A","B"],["C"]],"payoffs":{"0":[[1],[2]]}})");
        }) == ErrorCode::kParse);
  CHECK(error_code_of([] {
          parse_game(R"({"players":2,"strategies":[["A","B"],["C"]],"payoffs":{"0":[[1],[2]],"1":[[1,3],[2]]}})");
        }) == ErrorCode::kParse);

  SUBCASE("random round trips") {
    InstanceGenerator gen(6);
    for (int trial = 0; trial < 30; ++trial) {
      const GameSpec h = gen.small_game(default_payoff_values());
      const GameSpec back = parse_game(game_to_json(h).dump());
      CHECK(game_hash(back) == game_hash(h));
      for (std::size_t k = 0; k < h.profile_count(); ++k) {
        for (std::size_t i = 0; i < h.players(); ++i) {
          CHECK(back.payoff(i, h.profile_of(k)) == h.payoff(i, h.profile_of(k)));
        }
      }
    }
  }
}

TEST_CASE("payoff files") {
  const auto f = payoff_from_json(Json::parse(read_text_file(data("payoff_ab.json"))));
  CHECK(f[0] == q(-1));
  CHECK(f[1] == q(2));
  CHECK(payoff_from_json(payoff_to_json(f)).values()[1] == q(2));
  CHECK(error_code_of([] {
          payoff_from_json(Json::parse(R"({"domain":["a"],"values":{"b":"1"}})"));
        }) == ErrorCode::kValidation);
  CHECK(error_code_of([] {
          payoff_from_json(Json::parse(R"({"domain":["a"],"values":{"a":0.5}})"));
        }) == ErrorCode::kParse);
}

TEST_CASE("seeded generation is reproducible") {
  InstanceGenerator a(123), b(123), c(124);
  const auto ga = a.small_game(default_payoff_values());
  const auto gb = b.small_game(default_payoff_values());
  const auto gc = c.small_game(default_payoff_values());
  CHECK(game_hash(ga) == game_hash(gb));
  CHECK(game_hash(ga) != game_hash(gc));
  const Domain d = labeled_domain("x", 4);
  CHECK(a.capacity(d, 5) == b.capacity(d, 5));

  // A fixed draw sequence from the documented engine.
  InstanceGenerator e(0);
  std::mt19937_64 ref(0);
  for (int k = 0; k < 5; ++k) CHECK(e.draw() == ref());

  InstanceGenerator s(7);
  const PointSet support = d.subset({"x1", "x2"});
  for (int trial = 0; trial < 30; ++trial) {
    const auto mu = s.capacity(d, 4, &support);
    CHECK(vanishes_outside(mu, support));
  }
  CHECK(parse_grid("0, 1/2 ,1") == std::vector{q(0), q(1, 2), q(1)});
  CHECK(error_code_of([] { parse_grid("0,,1"); }) == ErrorCode::kParse);
  CHECK(labeled_domain("s", 3).labels() == std::vector<std::string>{"s0", "s1", "s2"});
}

TEST_CASE("support profile text") {
  const GameSpec g = coordination();
  const auto p = parse_support_profile(g, "A,B;nec:A,B");
  REQUIRE(p.players.size() == 2);
  CHECK(p.players[0].kind == SupportKind::kPossibility);
  CHECK(members(p.players[0].strategies) == std::set<std::size_t>{0, 1});
  CHECK(p.players[1].kind == SupportKind::kNecessity);
  CHECK(parse_support_profile(g, "pos:B;B") ==
        parse_support_profile(g, "B;B"));
  CHECK(error_code_of([&] { parse_support_profile(g, "A"); }) == ErrorCode::kParse);
  CHECK(error_code_of([&] { parse_support_profile(g, "A;C"); }) == ErrorCode::kParse);
}

TEST_CASE("reports") {
  RunConfig config;
  const GameSpec g = matching_pennies();
  const auto r = run_solve(g, config);
  CHECK(r.passed);
  const Json& j = r.report;
  CHECK(j["command"] == "solve");
  CHECK(j.contains("config"));
  CHECK(j["config"]["psi"] == "rational");
  CHECK(j["verdict"] == "PASS");
  CHECK(j["timing"].contains("wall_time_ms"));
  CHECK(j["psi"] == "rational");
  CHECK(j["game"]["hash"] == game_hash(g));
  CHECK(j["equilibrium_count"].get<std::size_t>() == j["equilibria"].size());
  CHECK(j["pure_nash"].empty());
  CHECK(deterministic_dump(j) == deterministic_dump(run_solve(g, config).report));
  CHECK(deterministic_dump(j).find("timing") == std::string::npos);

  // Keys keep their insertion order.
  auto it = j.begin();
  CHECK(it.key() == "command");
  CHECK((++it).key() == "config");
  CHECK(std::prev(j.end()).key() == "timing");

  const auto check = run_check_supports(g, parse_support_profile(g, "H;H"), config);
  CHECK_FALSE(check.passed);
  CHECK(check.report["verdict"] == "FAIL");
  CHECK(check.report["set_condition_agrees"] == true);

  const Domain d = dom({"a", "b"});
  const auto integ = run_integrate(PayoffFunction(d, {q(-1), q(2)}),
                                   from_probability(d, std::vector{q(1, 2), q(1, 2)}),
                                   config);
  CHECK(integ.passed);
  CHECK(integ.report["value"] == "0");

  const auto tensor = run_tensor({dirac(d, "a"), top_capacity(dom({"u", "v"}))}, false,
                                 {"a|u,a|v"}, config);
  CHECK(tensor.passed);
  CHECK(tensor.report["marginals_match"] == Json::array({true, true}));

  const auto lazy = run_tensor({dirac(d, "a"), top_capacity(dom({"u", "v"}))}, true,
                               {"a|u"}, config);
  CHECK_FALSE(lazy.report.contains("capacity"));

  RunConfig small = config;
  small.trials = 50;
  small.seed = 3;
  const auto oc = run_oracle_compare(small);
  CHECK(oc.passed);
  CHECK(oc.report["failures"] == 0);

  const auto vc = run_verify_convexity(2, config);
  CHECK(vc.passed);
  CHECK(vc.report["binarity"]["intervals"] == 36);
  CHECK(vc.report["t2"]["pairs"] == 36);
}
