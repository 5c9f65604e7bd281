/*
 * C interface of libsugeq: Sugeno-payoff equilibria under capacity beliefs.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a sugeq_status; on
 * failure a message is available from sugeq_last_error() until the next call
 * on the same thread. Strings returned through char** outputs are allocated
 * by the library and released with sugeq_string_free().
 *
 * Reports are JSON documents. Their "timing" member is the only part that
 * differs between two runs with the same inputs and configuration.
 */
#ifndef SUGEQ_SUGEQ_H_
#define SUGEQ_SUGEQ_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SUGEQ_BUILDING_LIBRARY)
#    define SUGEQ_API __declspec(dllexport)
#  else
#    define SUGEQ_API __declspec(dllimport)
#  endif
#else
#  define SUGEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sugeq_status {
  SUGEQ_OK = 0,
  SUGEQ_ERR_PARSE = 1,
  SUGEQ_ERR_VALIDATION = 2,
  SUGEQ_ERR_DOMAIN_MISMATCH = 3,
  SUGEQ_ERR_BUDGET = 4,
  SUGEQ_ERR_ARGUMENT = 5,
  SUGEQ_ERR_IO = 6,
  SUGEQ_ERR_INTERNAL = 7
} sugeq_status;

typedef struct sugeq_game sugeq_game;
typedef struct sugeq_capacity sugeq_capacity;
typedef struct sugeq_payoff sugeq_payoff;

typedef enum sugeq_family {
  SUGEQ_FAMILY_POSSIBILITY = 0,
  SUGEQ_FAMILY_POSSIBILITY_NECESSITY = 1
} sugeq_family;

/* Run configuration. Initialize with sugeq_options_init; NULL strings select
 * the defaults. */
typedef struct sugeq_options {
  const char* psi;        /* "rational" (default) or "logit:<scale>" */
  const char* grid;       /* comma separated rationals, default "0,1/2,1" */
  const char* resolution; /* rational, default "1/1000" */
  uint64_t seed;          /* default 0 */
  uint64_t budget;        /* candidate cap for searches, default 2^24 */
  uint64_t trials;        /* oracle-compare trials, default 1000 */
  sugeq_family family;    /* default SUGEQ_FAMILY_POSSIBILITY */
  int full_linked;        /* verify-convexity: nonzero adds the full
                             linked-family check */
} sugeq_options;

SUGEQ_API void sugeq_options_init(sugeq_options* options);

SUGEQ_API const char* sugeq_last_error(void);
SUGEQ_API const char* sugeq_status_name(sugeq_status status);
SUGEQ_API const char* sugeq_version(void);
SUGEQ_API void sugeq_string_free(char* text);

/* Games. allow_decimal != 0 accepts exact decimal payoffs such as "0.25". */
SUGEQ_API sugeq_status sugeq_game_parse(const char* json_text,
                                        int allow_decimal, sugeq_game** out);
SUGEQ_API sugeq_status sugeq_game_load(const char* path, int allow_decimal,
                                       sugeq_game** out);
/* Random game with players and strategy counts drawn from {2,3} and payoffs
 * from {-2,...,2}. */
SUGEQ_API sugeq_status sugeq_game_random(uint64_t seed, sugeq_game** out);
SUGEQ_API void sugeq_game_free(sugeq_game* game);
SUGEQ_API size_t sugeq_game_players(const sugeq_game* game);
SUGEQ_API size_t sugeq_game_strategies(const sugeq_game* game, size_t player);
SUGEQ_API sugeq_status sugeq_game_to_json(const sugeq_game* game, char** out);
SUGEQ_API sugeq_status sugeq_game_hash(const sugeq_game* game, char** out);

/* Capacities (dense tables). */
SUGEQ_API sugeq_status sugeq_capacity_parse(const char* json_text,
                                            sugeq_capacity** out);
SUGEQ_API sugeq_status sugeq_capacity_load(const char* path,
                                           sugeq_capacity** out);
SUGEQ_API void sugeq_capacity_free(sugeq_capacity* capacity);
SUGEQ_API size_t sugeq_capacity_size(const sugeq_capacity* capacity);
/* Value on the subset given by comma separated labels ("" is the empty set),
 * written as "p/q". */
SUGEQ_API sugeq_status sugeq_capacity_value(const sugeq_capacity* capacity,
                                            const char* subset, char** out);
SUGEQ_API sugeq_status sugeq_capacity_to_json(const sugeq_capacity* capacity,
                                              char** out);
/* Dense left-folded tensor product of count factors. */
SUGEQ_API sugeq_status sugeq_capacity_tensor(
    const sugeq_capacity* const* factors, size_t count, sugeq_capacity** out);

/* Payoff functions on a single domain. */
SUGEQ_API sugeq_status sugeq_payoff_parse(const char* json_text,
                                          int allow_decimal, sugeq_payoff** out);
SUGEQ_API sugeq_status sugeq_payoff_load(const char* path, int allow_decimal,
                                         sugeq_payoff** out);
SUGEQ_API void sugeq_payoff_free(sugeq_payoff* payoff);

/* Commands. Each writes a JSON report to *report and sets *passed to 1 on
 * success/PASS and 0 on FAIL (a property violation or a negative answer). */
SUGEQ_API sugeq_status sugeq_run_integrate(const sugeq_payoff* payoff,
                                           const sugeq_capacity* capacity,
                                           const sugeq_options* options,
                                           char** report, int* passed);
/* lazy != 0 evaluates only the queried subsets (';' separated, each a comma
 * separated list of '|'-joined tuple labels). */
SUGEQ_API sugeq_status sugeq_run_tensor(const sugeq_capacity* const* factors,
                                        size_t count, int lazy,
                                        const char* queries,
                                        const sugeq_options* options,
                                        char** report, int* passed);
SUGEQ_API sugeq_status sugeq_run_best_response(const sugeq_game* game,
                                               size_t player,
                                               const sugeq_capacity* belief,
                                               const sugeq_options* options,
                                               char** report, int* passed);
/* One belief per player, on that player's opponent domain. */
SUGEQ_API sugeq_status sugeq_run_check_beliefs(
    const sugeq_game* game, const sugeq_capacity* const* beliefs, size_t count,
    const sugeq_options* options, char** report, int* passed);
/* Support profile text: "A,B;A" with optional "nec:" group prefix. */
SUGEQ_API sugeq_status sugeq_run_check_supports(const sugeq_game* game,
                                                const char* profile,
                                                const sugeq_options* options,
                                                char** report, int* passed);
SUGEQ_API sugeq_status sugeq_run_solve(const sugeq_game* game,
                                       const sugeq_options* options,
                                       char** report, int* passed);
SUGEQ_API sugeq_status sugeq_run_verify_convexity(size_t domain_size,
                                                  const sugeq_options* options,
                                                  char** report, int* passed);
SUGEQ_API sugeq_status sugeq_run_oracle_compare(const sugeq_options* options,
                                                char** report, int* passed);

/* Copy of a report JSON text with the "timing" member removed. */
SUGEQ_API sugeq_status sugeq_report_strip_timing(const char* report,
                                                 char** out);

#ifdef __cplusplus
}
#endif

#endif /* SUGEQ_SUGEQ_H_ */
