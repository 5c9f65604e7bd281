// sugeq command line front end. Talks to the library only through sugeq.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sugeq/sugeq.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Failure {
  sugeq_status status;
  std::string message;
};

void check(sugeq_status status) {
  if (status != SUGEQ_OK) throw Failure{status, sugeq_last_error()};
}

struct GameDeleter {
  void operator()(sugeq_game* g) const { sugeq_game_free(g); }
};
struct CapacityDeleter {
  void operator()(sugeq_capacity* c) const { sugeq_capacity_free(c); }
};
struct PayoffDeleter {
  void operator()(sugeq_payoff* p) const { sugeq_payoff_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { sugeq_string_free(s); }
};

using Game = std::unique_ptr<sugeq_game, GameDeleter>;
using Capacity = std::unique_ptr<sugeq_capacity, CapacityDeleter>;
using Payoff = std::unique_ptr<sugeq_payoff, PayoffDeleter>;
using Text = std::unique_ptr<char, StringDeleter>;

Game load_game(const std::string& path, bool decimal) {
  sugeq_game* g = nullptr;
  check(sugeq_game_load(path.c_str(), decimal, &g));
  return Game(g);
}

Capacity load_capacity(const std::string& path) {
  sugeq_capacity* c = nullptr;
  check(sugeq_capacity_load(path.c_str(), &c));
  return Capacity(c);
}

std::vector<Capacity> load_capacities(const std::vector<std::string>& paths) {
  std::vector<Capacity> out;
  for (const auto& p : paths) out.push_back(load_capacity(p));
  return out;
}

std::vector<const sugeq_capacity*> raw(const std::vector<Capacity>& items) {
  std::vector<const sugeq_capacity*> out;
  for (const auto& c : items) out.push_back(c.get());
  return out;
}

struct Settings {
  std::string psi = "rational";
  std::string grid = "0,1/2,1";
  std::string resolution = "1/1000";
  std::uint64_t seed = 0;
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::uint64_t trials = 1000;
  std::string family = "possibility";
  bool full_linked = false;
  bool decimal = false;
  std::string out;

  sugeq_options options() const {
    sugeq_options o;
    sugeq_options_init(&o);
    o.psi = psi.c_str();
    o.grid = grid.c_str();
    o.resolution = resolution.c_str();
    o.seed = seed;
    o.budget = budget;
    o.trials = trials;
    o.family = family == "possibility" ? SUGEQ_FAMILY_POSSIBILITY
                                       : SUGEQ_FAMILY_POSSIBILITY_NECESSITY;
    o.full_linked = full_linked;
    return o;
  }
};

void write_output(const Settings& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f) throw Failure{SUGEQ_ERR_IO, "cannot write " + s.out};
  f << text << "\n";
}

// Reads *report and *passed only after the command has run.
int emit(const Settings& s, sugeq_status status, char** report,
         const int* passed) {
  check(status);
  Text owned(*report);
  write_output(s, owned.get());
  return *passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sugeno-payoff equilibria under capacity beliefs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sugeq_version()));

  Settings s;
  app.add_option("--psi", s.psi, "correction map: rational or logit:<scale>");
  app.add_option("--grid", s.grid, "value grid, comma separated rationals");
  app.add_option("--seed", s.seed, "seed for generated instances");
  app.add_option("--budget", s.budget, "candidate cap for searches");
  app.add_option("--out", s.out, "write the report here instead of stdout");
  app.add_option("--resolution", s.resolution, "oracle grid step");
  app.add_option("--trials", s.trials, "oracle-compare trials");
  app.add_flag("--decimal", s.decimal, "accept exact decimal payoffs");

  std::string payoff_path, capacity_path, game_path, support_text;
  std::vector<std::string> factor_paths, belief_paths, queries;
  bool lazy = false;
  std::size_t player = 0, domain_size = 2;

  auto* integrate = app.add_subcommand("integrate", "Sugeno integral of a payoff");
  integrate->add_option("payoff", payoff_path, "payoff file")->required();
  integrate->add_option("capacity", capacity_path, "capacity file")->required();

  auto* tensor = app.add_subcommand("tensor", "tensor product of capacities");
  tensor->add_option("factors", factor_paths, "capacity files, in order")
      ->required();
  tensor->add_flag("--lazy", lazy, "evaluate only the queried subsets");
  tensor->add_option("--query", queries,
                     "subset of the product, comma separated a|b labels");

  auto* br = app.add_subcommand("best-response", "best responses to a belief");
  br->add_option("game", game_path, "game file")->required();
  br->add_option("--player", player, "player index from 0")->required();
  br->add_option("--belief", capacity_path, "capacity on opponent profiles")
      ->required();

  auto* check_eq = app.add_subcommand("check-eq", "check an equilibrium");
  check_eq->add_option("game", game_path, "game file")->required();
  auto* candidate = check_eq->add_option_group("candidate");
  candidate->add_option("--beliefs", belief_paths,
                        "one capacity file per player, in order");
  auto* supports_opt = candidate->add_option(
      "--supports", support_text,
      "support profile such as \"A,B;nec:L,R\" (one group per player)");
  candidate->require_option(1);

  auto* solve = app.add_subcommand("solve", "search support-profile equilibria");
  solve->add_option("game", game_path, "game file")->required();
  solve->add_option("--family", s.family, "candidate family")
      ->check(CLI::IsMember({"possibility", "possibility-necessity"}));

  auto* convexity =
      app.add_subcommand("verify-convexity", "binarity and T2 on a grid space");
  convexity->add_option("--domain-size", domain_size, "points in the domain")
      ->check(CLI::Range(1, 4));
  convexity->add_flag("--full-linked", s.full_linked,
                      "also check every linked family (tiny spaces only)");

  auto* oracle = app.add_subcommand("oracle-compare",
                                    "closed form against the direct oracle");

  auto* generate = app.add_subcommand("generate", "print a seeded random game");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    const sugeq_options o = s.options();
    char* report = nullptr;
    int passed = 0;
    if (integrate->parsed()) {
      sugeq_payoff* p = nullptr;
      check(sugeq_payoff_load(payoff_path.c_str(), s.decimal, &p));
      Payoff payoff(p);
      Capacity mu = load_capacity(capacity_path);
      return emit(s, sugeq_run_integrate(payoff.get(), mu.get(), &o, &report,
                                         &passed),
                  &report, &passed);
    }
    if (tensor->parsed()) {
      auto factors = load_capacities(factor_paths);
      const auto list = raw(factors);
      std::string joined;
      for (std::size_t k = 0; k < queries.size(); ++k) {
        if (k) joined += ";";
        joined += queries[k];
      }
      return emit(s, sugeq_run_tensor(list.data(), list.size(), lazy,
                                      joined.c_str(), &o, &report, &passed),
                  &report, &passed);
    }
    if (br->parsed()) {
      Game game = load_game(game_path, s.decimal);
      Capacity belief = load_capacity(capacity_path);
      return emit(s, sugeq_run_best_response(game.get(), player, belief.get(),
                                             &o, &report, &passed),
                  &report, &passed);
    }
    if (check_eq->parsed()) {
      Game game = load_game(game_path, s.decimal);
      if (supports_opt->count()) {
        return emit(s, sugeq_run_check_supports(game.get(), support_text.c_str(),
                                                &o, &report, &passed),
                    &report, &passed);
      }
      auto beliefs = load_capacities(belief_paths);
      const auto list = raw(beliefs);
      return emit(s, sugeq_run_check_beliefs(game.get(), list.data(),
                                             list.size(), &o, &report, &passed),
                  &report, &passed);
    }
    if (solve->parsed()) {
      Game game = load_game(game_path, s.decimal);
      return emit(s, sugeq_run_solve(game.get(), &o, &report, &passed),
                  &report, &passed);
    }
    if (convexity->parsed()) {
      return emit(s, sugeq_run_verify_convexity(domain_size, &o, &report,
                                                &passed),
                  &report, &passed);
    }
    if (oracle->parsed()) {
      return emit(s, sugeq_run_oracle_compare(&o, &report, &passed),
                  &report, &passed);
    }
    if (generate->parsed()) {
      sugeq_game* g = nullptr;
      check(sugeq_game_random(s.seed, &g));
      Game game(g);
      char* text = nullptr;
      check(sugeq_game_to_json(game.get(), &text));
      write_output(s, Text(text).get());
      return kExitPass;
    }
  } catch (const Failure& f) {
    std::cerr << "sugeq: " << sugeq_status_name(f.status) << ": " << f.message
              << "\n";
    return kExitError;
  }
  return kExitError;
}
