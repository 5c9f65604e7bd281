#include "sugeq/sugeq.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "sugeq/error.hpp"
#include "sugeq/io.hpp"
#include "sugeq/report.hpp"
#include "sugeq/tensor.hpp"

struct sugeq_game {
  sugeq::GameSpec spec;
};
struct sugeq_capacity {
  sugeq::FiniteCapacity capacity;
};
struct sugeq_payoff {
  sugeq::PayoffFunction payoff;
};

namespace {

thread_local std::string g_last_error;

sugeq_status status_of(sugeq::ErrorCode code) {
  using sugeq::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
      return SUGEQ_ERR_PARSE;
    case ErrorCode::kDomainMismatch:
      return SUGEQ_ERR_DOMAIN_MISMATCH;
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kProductTooLarge:
      return SUGEQ_ERR_BUDGET;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kIndex:
    case ErrorCode::kBadResolution:
    case ErrorCode::kEqualCapacities:
      return SUGEQ_ERR_ARGUMENT;
    case ErrorCode::kIo:
      return SUGEQ_ERR_IO;
    default:
      return SUGEQ_ERR_VALIDATION;
  }
}

template <class Fn>
sugeq_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return SUGEQ_OK;
  } catch (const sugeq::Error& e) {
    g_last_error = std::string(sugeq::to_string(e.code())) + ": " + e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SUGEQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SUGEQ_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) {
    throw sugeq::Error(sugeq::ErrorCode::kInvalidArgument, what);
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

sugeq::RunConfig config_of(const sugeq_options* options) {
  sugeq::RunConfig config;
  if (!options) return config;
  if (options->psi) config.psi = options->psi;
  if (options->grid) config.grid = sugeq::parse_grid(options->grid);
  if (options->resolution) {
    config.resolution = sugeq::Rational::parse(options->resolution);
  }
  config.seed = options->seed;
  config.budget = options->budget;
  config.trials = options->trials;
  config.family = options->family == SUGEQ_FAMILY_POSSIBILITY
                      ? sugeq::SupportFamily::kPossibility
                      : sugeq::SupportFamily::kPossibilityNecessity;
  config.full_linked = options->full_linked != 0;
  // Rejects a bad psi id before any work.
  sugeq::psi_from_id(config.psi);
  return config;
}

void emit(const sugeq::CommandResult& result, char** report, int* passed) {
  *report = copy_string(result.report.dump(2));
  if (passed) *passed = result.passed ? 1 : 0;
}

std::vector<sugeq::FiniteCapacity> capacity_list(
    const sugeq_capacity* const* items, size_t count) {
  require(items != nullptr || count == 0, "null capacity list");
  std::vector<sugeq::FiniteCapacity> out;
  for (size_t k = 0; k < count; ++k) {
    require(items[k] != nullptr, "null capacity in list");
    out.push_back(items[k]->capacity);
  }
  return out;
}

sugeq::PayoffFunction parse_payoff(const std::string& text, bool allow_decimal) {
  sugeq::Json doc;
  try {
    doc = sugeq::Json::parse(text);
  } catch (const sugeq::Json::parse_error& e) {
    throw sugeq::Error(sugeq::ErrorCode::kParse,
                       std::string("payoff: ") + e.what());
  }
  return sugeq::payoff_from_json(doc, allow_decimal);
}

}  // namespace

extern "C" {

void sugeq_options_init(sugeq_options* options) {
  if (!options) return;
  options->psi = nullptr;
  options->grid = nullptr;
  options->resolution = nullptr;
  options->seed = 0;
  options->budget = std::uint64_t{1} << 24;
  options->trials = 1000;
  options->family = SUGEQ_FAMILY_POSSIBILITY;
  options->full_linked = 0;
}

const char* sugeq_last_error(void) { return g_last_error.c_str(); }

const char* sugeq_status_name(sugeq_status status) {
  switch (status) {
    case SUGEQ_OK: return "ok";
    case SUGEQ_ERR_PARSE: return "parse error";
    case SUGEQ_ERR_VALIDATION: return "validation error";
    case SUGEQ_ERR_DOMAIN_MISMATCH: return "domain mismatch";
    case SUGEQ_ERR_BUDGET: return "budget exceeded";
    case SUGEQ_ERR_ARGUMENT: return "invalid argument";
    case SUGEQ_ERR_IO: return "i/o error";
    case SUGEQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sugeq_version(void) { return "0.1.0"; }

void sugeq_string_free(char* text) { std::free(text); }

sugeq_status sugeq_game_parse(const char* json_text, int allow_decimal,
                              sugeq_game** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    *out = new sugeq_game{sugeq::parse_game(json_text, allow_decimal != 0)};
  });
}

sugeq_status sugeq_game_load(const char* path, int allow_decimal,
                             sugeq_game** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new sugeq_game{sugeq::load_game(path, allow_decimal != 0)};
  });
}

sugeq_status sugeq_game_random(uint64_t seed, sugeq_game** out) {
  return guarded([&] {
    require(out, "null argument");
    sugeq::InstanceGenerator gen(seed);
    *out = new sugeq_game{gen.small_game(sugeq::default_payoff_values())};
  });
}

void sugeq_game_free(sugeq_game* game) { delete game; }

size_t sugeq_game_players(const sugeq_game* game) {
  return game ? game->spec.players() : 0;
}

size_t sugeq_game_strategies(const sugeq_game* game, size_t player) {
  if (!game || player >= game->spec.players()) return 0;
  return game->spec.strategies(player).size();
}

sugeq_status sugeq_game_to_json(const sugeq_game* game, char** out) {
  return guarded([&] {
    require(game && out, "null argument");
    *out = copy_string(sugeq::game_to_json(game->spec).dump(2));
  });
}

sugeq_status sugeq_game_hash(const sugeq_game* game, char** out) {
  return guarded([&] {
    require(game && out, "null argument");
    *out = copy_string(sugeq::game_hash(game->spec));
  });
}

sugeq_status sugeq_capacity_parse(const char* json_text, sugeq_capacity** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    *out = new sugeq_capacity{sugeq::parse_capacity(json_text)};
  });
}

sugeq_status sugeq_capacity_load(const char* path, sugeq_capacity** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new sugeq_capacity{sugeq::load_capacity(path)};
  });
}

void sugeq_capacity_free(sugeq_capacity* capacity) { delete capacity; }

size_t sugeq_capacity_size(const sugeq_capacity* capacity) {
  return capacity ? capacity->capacity.domain().size() : 0;
}

sugeq_status sugeq_capacity_value(const sugeq_capacity* capacity,
                                  const char* subset, char** out) {
  return guarded([&] {
    require(capacity && subset && out, "null argument");
    const auto& domain = capacity->capacity.domain();
    sugeq::PointSet set = domain.empty_set();
    const std::string text(subset);
    std::size_t start = 0;
    while (!text.empty()) {
      const auto pos = text.find(',', start);
      set.set(domain.index_of(text.substr(start, pos - start)));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    *out = copy_string(capacity->capacity.value(set).str());
  });
}

sugeq_status sugeq_capacity_to_json(const sugeq_capacity* capacity, char** out) {
  return guarded([&] {
    require(capacity && out, "null argument");
    *out = copy_string(sugeq::capacity_to_json(capacity->capacity).dump(2));
  });
}

sugeq_status sugeq_capacity_tensor(const sugeq_capacity* const* factors,
                                   size_t count, sugeq_capacity** out) {
  return guarded([&] {
    require(out && count > 0, "need at least one factor");
    const auto list = capacity_list(factors, count);
    *out = new sugeq_capacity{sugeq::tensor_n(list)};
  });
}

sugeq_status sugeq_payoff_parse(const char* json_text, int allow_decimal,
                                sugeq_payoff** out) {
  return guarded([&] {
    require(json_text && out, "null argument");
    *out = new sugeq_payoff{parse_payoff(json_text, allow_decimal != 0)};
  });
}

sugeq_status sugeq_payoff_load(const char* path, int allow_decimal,
                               sugeq_payoff** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new sugeq_payoff{
        parse_payoff(sugeq::read_text_file(path), allow_decimal != 0)};
  });
}

void sugeq_payoff_free(sugeq_payoff* payoff) { delete payoff; }

sugeq_status sugeq_run_integrate(const sugeq_payoff* payoff,
                                 const sugeq_capacity* capacity,
                                 const sugeq_options* options, char** report,
                                 int* passed) {
  return guarded([&] {
    require(payoff && capacity && report, "null argument");
    emit(sugeq::run_integrate(payoff->payoff, capacity->capacity,
                              config_of(options)),
         report, passed);
  });
}

sugeq_status sugeq_run_tensor(const sugeq_capacity* const* factors,
                              size_t count, int lazy, const char* queries,
                              const sugeq_options* options, char** report,
                              int* passed) {
  return guarded([&] {
    require(report && count > 0, "need at least one factor");
    std::vector<std::string> q;
    if (queries) {
      const std::string text(queries);
      std::size_t start = 0;
      while (!text.empty()) {
        const auto pos = text.find(';', start);
        q.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
    }
    emit(sugeq::run_tensor(capacity_list(factors, count), lazy != 0, q,
                           config_of(options)),
         report, passed);
  });
}

sugeq_status sugeq_run_best_response(const sugeq_game* game, size_t player,
                                     const sugeq_capacity* belief,
                                     const sugeq_options* options,
                                     char** report, int* passed) {
  return guarded([&] {
    require(game && belief && report, "null argument");
    emit(sugeq::run_best_response(game->spec, player, belief->capacity,
                                  config_of(options)),
         report, passed);
  });
}

sugeq_status sugeq_run_check_beliefs(const sugeq_game* game,
                                     const sugeq_capacity* const* beliefs,
                                     size_t count, const sugeq_options* options,
                                     char** report, int* passed) {
  return guarded([&] {
    require(game && report, "null argument");
    emit(sugeq::run_check_beliefs(game->spec, capacity_list(beliefs, count),
                                  config_of(options)),
         report, passed);
  });
}

sugeq_status sugeq_run_check_supports(const sugeq_game* game,
                                      const char* profile,
                                      const sugeq_options* options,
                                      char** report, int* passed) {
  return guarded([&] {
    require(game && profile && report, "null argument");
    const auto config = config_of(options);
    emit(sugeq::run_check_supports(
             game->spec, sugeq::parse_support_profile(game->spec, profile),
             config),
         report, passed);
  });
}

sugeq_status sugeq_run_solve(const sugeq_game* game,
                             const sugeq_options* options, char** report,
                             int* passed) {
  return guarded([&] {
    require(game && report, "null argument");
    emit(sugeq::run_solve(game->spec, config_of(options)), report, passed);
  });
}

sugeq_status sugeq_run_verify_convexity(size_t domain_size,
                                        const sugeq_options* options,
                                        char** report, int* passed) {
  return guarded([&] {
    require(report, "null argument");
    emit(sugeq::run_verify_convexity(domain_size, config_of(options)), report,
         passed);
  });
}

sugeq_status sugeq_run_oracle_compare(const sugeq_options* options,
                                      char** report, int* passed) {
  return guarded([&] {
    require(report, "null argument");
    emit(sugeq::run_oracle_compare(config_of(options)), report, passed);
  });
}

sugeq_status sugeq_report_strip_timing(const char* report, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    sugeq::Json doc;
    try {
      doc = sugeq::Json::parse(report);
    } catch (const sugeq::Json::parse_error& e) {
      throw sugeq::Error(sugeq::ErrorCode::kParse, e.what());
    }
    *out = copy_string(sugeq::deterministic_dump(doc));
  });
}

}  // extern "C"
