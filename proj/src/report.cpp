#include "sugeq/report.hpp"

#include <chrono>
#include <ctime>

#include "sugeq/convexity.hpp"
#include "sugeq/error.hpp"
#include "sugeq/tensor.hpp"

namespace sugeq {

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kTensorOrder =
    "left fold in ascending factor order: ((m0 x m1) x m2) x ...";

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Command name and configuration come first in every report.
Json begin_report(const char* command, const RunConfig& config) {
  Json report;
  report["command"] = command;
  report["config"] = config.to_json();
  return report;
}

CommandResult finish(Json report, bool passed, Clock::time_point started) {
  report["verdict"] = passed ? "PASS" : "FAIL";
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           Clock::now() - started)
                           .count();
  report["timing"] = {{"timestamp", utc_timestamp()},
                      {"wall_time_ms", elapsed}};
  return {std::move(report), passed};
}

Json labels_json(const Domain& domain, const PointSet& set) {
  Json out = Json::array();
  for (std::size_t x = 0; x < domain.size(); ++x) {
    if (set.test(x)) out.push_back(domain.label(x));
  }
  return out;
}

Json game_summary(const GameSpec& game) {
  Json sizes = Json::array();
  for (std::size_t i = 0; i < game.players(); ++i) {
    sizes.push_back(game.strategies(i).size());
  }
  return {{"hash", game_hash(game)},
          {"players", game.players()},
          {"strategy_counts", sizes}};
}

Json iteration_json(const GameSpec& game, const IterationResult& result) {
  Json out;
  switch (result.status) {
    case IterationStatus::kStable: out["status"] = "stable"; break;
    case IterationStatus::kCycle: out["status"] = "cycle"; break;
    case IterationStatus::kIterationLimit: out["status"] = "iteration_limit"; break;
  }
  out["steps"] = result.trajectory.size();
  if (result.status == IterationStatus::kCycle) {
    out["cycle_start"] = result.cycle_start;
  }
  if (result.stable) {
    out["profile"] = support_profile_to_json(game, *result.stable);
    out["certificate"] = certificate_to_json(game, *result.certificate);
  }
  return out;
}

}  // namespace

Json RunConfig::to_json() const {
  Json g = Json::array();
  for (const auto& v : grid) g.push_back(v.str());
  return {{"psi", psi},
          {"grid", g},
          {"seed", seed},
          {"budget", budget},
          {"resolution", resolution.str()},
          {"trials", trials},
          {"support_family", sugeq::to_string(family)},
          {"full_linked", full_linked}};
}

Json certificate_to_json(const GameSpec& game,
                         const EquilibriumCertificate& certificate) {
  Json out;
  out["psi"] = certificate.psi_id;
  out["equilibrium"] = certificate.equilibrium;
  Json players = Json::array();
  for (std::size_t i = 0; i < certificate.best_responses.size(); ++i) {
    players.push_back(
        {{"player", i},
         {"best_responses",
          labels_json(game.strategies(i), certificate.best_responses[i])},
         {"verification", certificate.verification[i].str()},
         {"degenerate", static_cast<bool>(certificate.degenerate[i])}});
  }
  out["players"] = players;
  if (certificate.set_condition) out["set_condition"] = *certificate.set_condition;
  return out;
}

Json support_profile_to_json(const GameSpec& game,
                             const SupportProfile& profile) {
  Json out = Json::array();
  for (std::size_t i = 0; i < profile.players.size(); ++i) {
    const auto& s = profile.players[i];
    out.push_back({{"kind", to_string(s.kind)},
                   {"strategies", labels_json(game.strategies(i), s.strategies)}});
  }
  return out;
}

CommandResult run_integrate(const PayoffFunction& f, const FiniteCapacity& mu,
                            const RunConfig& config) {
  const auto started = Clock::now();
  require_same_domain(f.domain(), mu.domain(), "integrate");
  const CorrectionMap psi = psi_from_id(config.psi);
  Json report = begin_report("integrate", config);
  const Rational closed = sugeno_integral(f, mu, psi);
  const Rational oracle = sugeno_oracle(f, mu, psi, config.resolution);
  Rational deviation = closed - oracle;
  if (deviation.sign() < 0) deviation = -deviation;
  const bool ok = deviation <= config.resolution;
  report["psi"] = psi.id();
  report["domain"] = f.domain().labels();
  report["value"] = closed.str();
  report["value_approx"] = closed.to_double();
  report["oracle"] = oracle.str();
  report["deviation"] = deviation.str();
  report["within_resolution"] = ok;
  return finish(std::move(report), ok, started);
}

CommandResult run_tensor(const std::vector<FiniteCapacity>& factors, bool lazy,
                         const std::vector<std::string>& queries,
                         const RunConfig& config) {
  const auto started = Clock::now();
  if (factors.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "tensor needs at least one factor");
  }
  Json report = begin_report("tensor", config);
  report["order"] = kTensorOrder;
  Json fl = Json::array();
  for (const auto& f : factors) fl.push_back(f.domain().labels());
  report["factors"] = fl;

  const auto view = lazy_tensor(factors);
  const Domain& product = view->domain();
  report["mode"] = lazy ? "lazy" : "dense";
  report["product_size"] = product.size();

  bool ok = true;
  if (!lazy) {
    const FiniteCapacity dense = tensor_n(factors);
    report["capacity"] = capacity_to_json(dense);
    // Marginal law: the i-th marginal of the product is the i-th factor.
    Json marginals = Json::array();
    if (factors.size() > 1) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const bool equal = marginal(dense, i) == factors[i];
        ok = ok && equal;
        marginals.push_back(equal);
      }
    }
    report["marginals_match"] = marginals;
    if (factors.size() == 3) {
      const auto d = compare_bracketings(factors[0], factors[1], factors[2]);
      Json diag = {{"subsets_compared", d.subsets_compared},
                   {"discrepancies", d.discrepancies}};
      if (d.first_discrepancy) {
        diag["first_discrepancy"] =
            subset_key(product, make_set(product.size(), *d.first_discrepancy));
      }
      report["bracketing"] = diag;
    }
  }
  Json answers = Json::array();
  for (const auto& q : queries) {
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (!q.empty()) {
      const auto pos = q.find(',', start);
      labels.push_back(q.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    PointSet set = product.empty_set();
    for (const auto& l : labels) set.set(product.index_of(l));
    answers.push_back({{"subset", subset_key(product, set)},
                       {"value", view->value(set).str()}});
  }
  if (!queries.empty()) report["queries"] = answers;
  return finish(std::move(report), ok, started);
}

CommandResult run_best_response(const GameSpec& game, std::size_t player,
                                const FiniteCapacity& belief,
                                const RunConfig& config) {
  const auto started = Clock::now();
  const CorrectionMap psi = psi_from_id(config.psi);
  Json report = begin_report("best-response", config);
  report["game"] = game_summary(game);
  report["psi"] = psi.id();
  report["player"] = player;
  const Domain& own = game.strategies(player);
  Json payoffs = Json::object();
  for (std::size_t x = 0; x < own.size(); ++x) {
    payoffs[own.label(x)] = expected_payoff(game, player, x, belief, psi).str();
  }
  report["expected_payoffs"] = payoffs;
  report["best_responses"] =
      labels_json(own, best_response(game, player, belief, psi));
  return finish(std::move(report), true, started);
}

CommandResult run_check_beliefs(const GameSpec& game,
                                const std::vector<FiniteCapacity>& beliefs,
                                const RunConfig& config) {
  const auto started = Clock::now();
  const CorrectionMap psi = psi_from_id(config.psi);
  BeliefSystem system;
  for (const auto& b : beliefs) {
    system.beliefs.push_back(std::make_shared<FiniteCapacity>(b));
  }
  const auto cert = is_equilibrium(game, system, psi);
  Json report = begin_report("check-eq", config);
  report["game"] = game_summary(game);
  report["psi"] = psi.id();
  report["certificate"] = certificate_to_json(game, cert);
  return finish(std::move(report), cert.equilibrium, started);
}

CommandResult run_check_supports(const GameSpec& game,
                                 const SupportProfile& profile,
                                 const RunConfig& config) {
  const auto started = Clock::now();
  const CorrectionMap psi = psi_from_id(config.psi);
  const auto cert = check_support_profile(game, profile, psi);
  Json report = begin_report("check-eq", config);
  report["game"] = game_summary(game);
  report["psi"] = psi.id();
  report["supports"] = support_profile_to_json(game, profile);
  report["certificate"] = certificate_to_json(game, cert);
  const bool agrees = cert.set_condition && *cert.set_condition == cert.equilibrium;
  report["set_condition_agrees"] = agrees;
  return finish(std::move(report), cert.equilibrium && agrees, started);
}

CommandResult run_solve(const GameSpec& game, const RunConfig& config) {
  const auto started = Clock::now();
  const CorrectionMap psi = psi_from_id(config.psi);
  SupportSearchOptions options;
  options.family = config.family;
  options.budget = config.budget;
  const auto result = find_equilibria_supports(game, psi, options);

  Json report = begin_report("solve", config);
  report["game"] = game_summary(game);
  report["psi"] = psi.id();
  report["tensor_order"] = kTensorOrder;
  report["candidates"] = result.candidates;
  Json list = Json::array();
  std::size_t nondegenerate = 0;
  for (const auto& eq : result.equilibria) {
    bool degenerate = false;
    for (bool d : eq.certificate.degenerate) degenerate = degenerate || d;
    if (!degenerate) ++nondegenerate;
    list.push_back({{"supports", support_profile_to_json(game, eq.profile)},
                    {"degenerate", degenerate},
                    {"certificate", certificate_to_json(game, eq.certificate)}});
  }
  report["equilibrium_count"] = result.equilibria.size();
  report["nondegenerate_count"] = nondegenerate;
  report["equilibria"] = list;

  Json nash = Json::array();
  for (const auto& profile : pure_nash(game)) {
    Json labels = Json::array();
    for (std::size_t i = 0; i < profile.size(); ++i) {
      labels.push_back(game.strategies(i).label(profile[i]));
    }
    nash.push_back(labels);
  }
  report["pure_nash"] = nash;
  report["best_response_iteration"] =
      iteration_json(game, iterate_best_response_supports(game, psi, 64));
  return finish(std::move(report), !result.equilibria.empty(), started);
}

CommandResult run_verify_convexity(std::size_t domain_size,
                                   const RunConfig& config) {
  const auto started = Clock::now();
  if (domain_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "domain size must be positive");
  }
  const Domain domain = labeled_domain("x", domain_size);
  const auto space = enumerate_capacities(domain, config.grid);
  Json report = begin_report("verify-convexity", config);
  report["domain"] = domain.labels();
  report["capacities"] = space.capacities.size();

  BinarityOptions options;
  options.full_linked_families = config.full_linked;
  const auto bin = check_binarity(space, options);
  Json b = {{"intervals", bin.intervals},
            {"linked_pairs", bin.linked_pairs},
            {"linked_triples", bin.linked_triples},
            {"failures", bin.failures}};
  if (bin.full_families_checked) {
    b["linked_families"] = bin.linked_families;
    b["family_failures"] = bin.family_failures;
  }
  if (bin.counterexample) b["counterexample"] = *bin.counterexample;
  b["verdict"] = bin.passed() ? "PASS" : "FAIL";
  report["binarity"] = b;

  const auto t2 = check_t2(space);
  Json t = {{"pairs", t2.pairs},
            {"failures", t2.failures},
            {"half_identity_failures", t2.half_identity_failures}};
  if (t2.counterexample) {
    t["counterexample"] = {t2.counterexample->first, t2.counterexample->second};
  }
  t["verdict"] = t2.passed() ? "PASS" : "FAIL";
  report["t2"] = t;
  return finish(std::move(report), bin.passed() && t2.passed(), started);
}

CommandResult run_oracle_compare(const RunConfig& config) {
  const auto started = Clock::now();
  const CorrectionMap psi = psi_from_id(config.psi);
  InstanceGenerator gen(config.seed);
  Rational worst(0);
  std::uint64_t exact = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failure;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const Domain domain = labeled_domain("x", 1 + gen.pick(6));
    const FiniteCapacity mu =
        gen.capacity(domain, static_cast<long>(1 + gen.pick(12)));
    const PayoffFunction f =
        gen.payoff(domain, -3, 3, static_cast<long>(1 + gen.pick(8)));
    const Rational closed = sugeno_integral(f, mu, psi);
    const Rational oracle = sugeno_oracle(f, mu, psi, config.resolution);
    Rational deviation = closed - oracle;
    if (deviation.sign() < 0) deviation = -deviation;
    if (deviation.is_zero()) ++exact;
    worst = max(worst, deviation);
    if (deviation > config.resolution) {
      ++failures;
      if (!first_failure) first_failure = t;
    }
  }
  Json report = begin_report("oracle-compare", config);
  report["psi"] = psi.id();
  report["trials"] = config.trials;
  report["max_deviation"] = worst.str();
  report["max_deviation_approx"] = worst.to_double();
  report["exact_matches"] = exact;
  report["failures"] = failures;
  if (first_failure) report["first_failure"] = *first_failure;
  return finish(std::move(report), failures == 0, started);
}

SupportProfile parse_support_profile(const GameSpec& game,
                                     std::string_view text) {
  SupportProfile profile;
  std::size_t start = 0;
  std::vector<std::string_view> groups;
  while (true) {
    const auto pos = text.find(';', start);
    groups.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (groups.size() != game.players()) {
    throw Error(ErrorCode::kParse,
                "support profile has " + std::to_string(groups.size()) +
                    " groups for " + std::to_string(game.players()) + " players");
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::string_view g = groups[i];
    PlayerSupport s;
    if (g.starts_with("nec:")) {
      s.kind = SupportKind::kNecessity;
      g.remove_prefix(4);
    } else if (g.starts_with("pos:")) {
      g.remove_prefix(4);
    }
    const Domain& own = game.strategies(i);
    s.strategies = own.empty_set();
    std::size_t at = 0;
    while (!g.empty()) {
      const auto pos = g.find(',', at);
      const std::string label(g.substr(at, pos - at));
      const auto index = own.find(label);
      if (!index) {
        throw Error(ErrorCode::kParse, "player " + std::to_string(i) +
                                           ": unknown strategy \"" + label + "\"");
      }
      s.strategies.set(*index);
      if (pos == std::string_view::npos) break;
      at = pos + 1;
    }
    profile.players.push_back(std::move(s));
  }
  return profile;
}

std::string deterministic_dump(const Json& report) {
  Json copy = report;
  if (copy.is_object()) copy.erase("timing");
  return copy.dump();
}

}  // namespace sugeq
