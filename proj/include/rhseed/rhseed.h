// Copyright 2026 The rhseed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RHSEED_RHSEED_H_
#define RHSEED_RHSEED_H_

/*
 * C interface to the rhseed planning library: forward-model toy games,
 * budgeted agents (vanilla / seeded rolling horizon evolution, open-loop
 * MCTS), the experiment runner and the Mann-Whitney significance test.
 *
 * All objects are opaque handles created by *_create and released by
 * *_destroy. Functions that can fail return an rhseed_status; on failure a
 * description is available from rhseed_last_error() on the same thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RHSEED_BUILDING_LIBRARY)
#    define RHSEED_API __declspec(dllexport)
#  else
#    define RHSEED_API __declspec(dllimport)
#  endif
#else
#  define RHSEED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rhseed_status {
  RHSEED_OK = 0,
  RHSEED_ERR_INVALID_ARGUMENT = 1, /* bad name, spec, range or null pointer */
  RHSEED_ERR_CONTRACT = 2,         /* precondition broken, e.g. terminal state */
  RHSEED_ERR_IO = 3,
  RHSEED_ERR_BUDGET_AUDIT = 4,     /* a decision overspent its FM-call budget */
  RHSEED_ERR_INTERNAL = 5
} rhseed_status;

typedef enum rhseed_outcome {
  RHSEED_ONGOING = 0,
  RHSEED_WIN = 1,
  RHSEED_LOSS = 2
} rhseed_outcome;

RHSEED_API const char* rhseed_version(void);

/* Message for the last failed call on this thread; "" if none. */
RHSEED_API const char* rhseed_last_error(void);

/* Strings returned through char** out-parameters are released with this. */
RHSEED_API void rhseed_string_free(char* s);

/* ---- Random source ----------------------------------------------------- */

typedef struct rhseed_rng rhseed_rng;

RHSEED_API rhseed_status rhseed_rng_create(uint64_t seed, rhseed_rng** out);
RHSEED_API void rhseed_rng_destroy(rhseed_rng* rng);

/* ---- Games ------------------------------------------------------------- */

typedef struct rhseed_game rhseed_game;

/* `spec` is "name:level", e.g. "corridor:0". */
RHSEED_API rhseed_status rhseed_game_create(const char* spec, rhseed_game** out);
RHSEED_API rhseed_status rhseed_game_copy(const rhseed_game* game,
                                          rhseed_game** out);
RHSEED_API void rhseed_game_destroy(rhseed_game* game);

/* Names of the built-in games, comma separated. Static storage. */
RHSEED_API const char* rhseed_game_names(void);

RHSEED_API int rhseed_game_legal_actions(const rhseed_game* game);
RHSEED_API rhseed_status rhseed_game_advance(rhseed_game* game, int action,
                                             rhseed_rng* rng);
RHSEED_API rhseed_outcome rhseed_game_outcome(const rhseed_game* game);
RHSEED_API double rhseed_game_score(const rhseed_game* game);
RHSEED_API int rhseed_game_tick(const rhseed_game* game);
RHSEED_API int rhseed_game_max_ticks(const rhseed_game* game);
/* 1 if both handles hold identical states, 0 otherwise. */
RHSEED_API int rhseed_game_equal(const rhseed_game* a, const rhseed_game* b);
/* Human-readable dump; free with rhseed_string_free. */
RHSEED_API rhseed_status rhseed_game_describe(const rhseed_game* game,
                                              char** out);

/* ---- Agents ------------------------------------------------------------ */

typedef struct rhseed_agent rhseed_agent;

/* `name` is one of "vanilla", "1sla-seed", "mcts-seed", "olmcts".
 * population_size (P) is ignored by "olmcts"; individual_length (L) doubles
 * as the MCTS rollout depth. */
RHSEED_API rhseed_status rhseed_agent_create(const char* name,
                                             int population_size,
                                             int individual_length,
                                             rhseed_agent** out);
RHSEED_API void rhseed_agent_destroy(rhseed_agent* agent);

/* Picks an action for a non-terminal state with a fresh budget of `budget`
 * FM calls. `fm_calls_used` may be NULL. */
RHSEED_API rhseed_status rhseed_agent_decide(const rhseed_agent* agent,
                                             const rhseed_game* game,
                                             int budget, rhseed_rng* rng,
                                             int* action, int* fm_calls_used);

/* ---- Runs and experiments ---------------------------------------------- */

typedef struct rhseed_run_record {
  char game[32];
  int level;
  char agent[16];
  int population_size;
  int individual_length;
  int win;
  double final_score;
  int ticks;
  long long fm_calls_total;
  uint64_t run_seed;
} rhseed_run_record;

RHSEED_API rhseed_status rhseed_play_game(const char* spec, const char* agent,
                                          int population_size,
                                          int individual_length, int budget,
                                          uint64_t run_seed,
                                          rhseed_run_record* out);

/* Seed used by the experiment runner for one cell of the grid. */
RHSEED_API uint64_t rhseed_derive_run_seed(uint64_t master_seed,
                                           const char* game, int level,
                                           const char* agent,
                                           int population_size,
                                           int individual_length,
                                           int repeat_index);

typedef struct rhseed_experiment_options {
  const char* games;   /* comma separated; NULL = all games */
  const char* agents;  /* comma separated; NULL = all four agents */
  const char* configs; /* "1x6,2x8,..."; NULL = the default diagonal */
  const char* levels;  /* "0..4" or "0,1,3"; NULL = 0..4 */
  int repeats;         /* per level */
  int budget;          /* FM calls per decision */
  uint64_t master_seed;
  int threads;         /* 0 = hardware concurrency */
} rhseed_experiment_options;

RHSEED_API void rhseed_experiment_options_init(rhseed_experiment_options* o);

typedef void (*rhseed_progress_fn)(size_t done, size_t total, void* user);

/* Runs the grid and writes <out_dir>/runs.csv (rows streamed as runs finish),
 * <out_dir>/experiment.json, and the summary files written by rhseed_report.
 * Returns RHSEED_ERR_BUDGET_AUDIT if any decision overspent. */
RHSEED_API rhseed_status rhseed_run_experiment(
    const rhseed_experiment_options* options, const char* out_dir,
    rhseed_progress_fn progress, void* user, size_t* records_written);

/* Reads <in_dir>/runs.csv and writes summary.csv, summary.json and
 * summary.txt into `out_dir` (NULL = in_dir). `text`, if non-NULL, receives
 * the text summary (free with rhseed_string_free). Returns
 * RHSEED_ERR_BUDGET_AUDIT, after writing, if a record claims more FM calls
 * than ticks * budget (budget read from experiment.json when present). */
RHSEED_API rhseed_status rhseed_report(const char* in_dir, const char* out_dir,
                                       char** text);

/* ---- Statistics -------------------------------------------------------- */

typedef struct rhseed_mw_result {
  double u_xy;
  double u_yx;
  double p_two_tailed;
  int better; /* 0 none, 1 xs, 2 ys */
  int exact;  /* 1 if the exact permutation distribution was used */
} rhseed_mw_result;

RHSEED_API rhseed_status rhseed_mann_whitney(const double* xs, size_t nx,
                                             const double* ys, size_t ny,
                                             rhseed_mw_result* out);

/* "87.00 (3.36)"-style win-rate cell for `wins` out of `runs`. Fails with
 * RHSEED_ERR_INVALID_ARGUMENT rather than truncating. */
RHSEED_API rhseed_status rhseed_format_win_rate(int wins, int runs, char* buf,
                                                size_t buf_len);

#ifdef __cplusplus
}
#endif

#endif  /* RHSEED_RHSEED_H_ */
