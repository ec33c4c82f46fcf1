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

#include "rhseed/rhseed.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <ios>
#include <memory>
#include <stdexcept>
#include <string>

#include "core/agent.hpp"
#include "core/budget.hpp"
#include "core/check.hpp"
#include "core/experiment.hpp"
#include "core/game.hpp"
#include "core/output.hpp"
#include "core/report.hpp"
#include "core/rng.hpp"
#include "core/stats.hpp"

struct rhseed_rng {
  rhseed::Rng rng;
};

struct rhseed_game {
  rhseed::GameState state;
};

struct rhseed_agent {
  rhseed::Agent agent;
};

namespace {

thread_local std::string last_error;

rhseed_status fail(rhseed_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body` and maps exceptions onto status codes.
template <typename F>
rhseed_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const rhseed::ContractViolation& e) {
    return fail(RHSEED_ERR_CONTRACT, e.what());
  } catch (const rhseed::BudgetAuditError& e) {
    return fail(RHSEED_ERR_BUDGET_AUDIT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RHSEED_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(RHSEED_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(RHSEED_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RHSEED_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void copy_field(char* dst, std::size_t cap, const std::string& src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

void fill_record(const rhseed::RunRecord& r, rhseed_run_record* out) {
  copy_field(out->game, sizeof(out->game), r.game);
  out->level = r.level;
  copy_field(out->agent, sizeof(out->agent), r.agent);
  out->population_size = r.population_size;
  out->individual_length = r.individual_length;
  out->win = r.win ? 1 : 0;
  out->final_score = r.final_score;
  out->ticks = r.ticks;
  out->fm_calls_total = r.fm_calls_total;
  out->run_seed = r.run_seed;
}

#define RHSEED_REQUIRE(ptr)                                              \
  do {                                                                   \
    if ((ptr) == nullptr) {                                              \
      return fail(RHSEED_ERR_INVALID_ARGUMENT, #ptr " must not be NULL"); \
    }                                                                    \
  } while (false)

}  // namespace

extern "C" {

const char* rhseed_version(void) { return "0.1.0"; }

const char* rhseed_last_error(void) { return last_error.c_str(); }

void rhseed_string_free(char* s) { std::free(s); }

rhseed_status rhseed_rng_create(uint64_t seed, rhseed_rng** out) {
  RHSEED_REQUIRE(out);
  return guarded([&] {
    *out = new rhseed_rng{rhseed::Rng(seed)};
    return RHSEED_OK;
  });
}

void rhseed_rng_destroy(rhseed_rng* rng) { delete rng; }

rhseed_status rhseed_game_create(const char* spec, rhseed_game** out) {
  RHSEED_REQUIRE(spec);
  RHSEED_REQUIRE(out);
  return guarded([&] {
    *out = new rhseed_game{
        rhseed::make_initial_state(rhseed::GameSpec::parse(spec))};
    return RHSEED_OK;
  });
}

rhseed_status rhseed_game_copy(const rhseed_game* game, rhseed_game** out) {
  RHSEED_REQUIRE(game);
  RHSEED_REQUIRE(out);
  return guarded([&] {
    *out = new rhseed_game{game->state};
    return RHSEED_OK;
  });
}

void rhseed_game_destroy(rhseed_game* game) { delete game; }

const char* rhseed_game_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : rhseed::game_names()) {
      if (!s.empty()) s += ',';
      s += n;
    }
    return s;
  }();
  return names.c_str();
}

int rhseed_game_legal_actions(const rhseed_game* game) {
  return game != nullptr ? game->state.legal_actions() : 0;
}

rhseed_status rhseed_game_advance(rhseed_game* game, int action,
                                  rhseed_rng* rng) {
  RHSEED_REQUIRE(game);
  RHSEED_REQUIRE(rng);
  return guarded([&] {
    game->state.advance_in_place(rhseed::ActionId{action}, rng->rng);
    return RHSEED_OK;
  });
}

rhseed_outcome rhseed_game_outcome(const rhseed_game* game) {
  if (game == nullptr) return RHSEED_ONGOING;
  switch (game->state.outcome()) {
    case rhseed::Outcome::kWin:
      return RHSEED_WIN;
    case rhseed::Outcome::kLoss:
      return RHSEED_LOSS;
    default:
      return RHSEED_ONGOING;
  }
}

double rhseed_game_score(const rhseed_game* game) {
  return game != nullptr ? game->state.score() : 0.0;
}

int rhseed_game_tick(const rhseed_game* game) {
  return game != nullptr ? game->state.tick() : 0;
}

int rhseed_game_max_ticks(const rhseed_game* game) {
  return game != nullptr ? game->state.max_ticks() : 0;
}

int rhseed_game_equal(const rhseed_game* a, const rhseed_game* b) {
  if (a == nullptr || b == nullptr) return 0;
  return a->state == b->state ? 1 : 0;
}

rhseed_status rhseed_game_describe(const rhseed_game* game, char** out) {
  RHSEED_REQUIRE(game);
  RHSEED_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(game->state.to_string());
    return RHSEED_OK;
  });
}

rhseed_status rhseed_agent_create(const char* name, int population_size,
                                  int individual_length, rhseed_agent** out) {
  RHSEED_REQUIRE(name);
  RHSEED_REQUIRE(out);
  return guarded([&] {
    const auto kind = rhseed::parse_agent(name);
    if (!kind) return fail(RHSEED_ERR_INVALID_ARGUMENT,
                           std::string("unknown agent '") + name + "'");
    if (population_size < 1 || individual_length < 1) {
      return fail(RHSEED_ERR_INVALID_ARGUMENT, "P and L must be positive");
    }
    rhseed::AgentConfig config;
    config.kind = *kind;
    config.population_size = population_size;
    config.individual_length = individual_length;
    *out = new rhseed_agent{rhseed::Agent(config)};
    return RHSEED_OK;
  });
}

void rhseed_agent_destroy(rhseed_agent* agent) { delete agent; }

rhseed_status rhseed_agent_decide(const rhseed_agent* agent,
                                  const rhseed_game* game, int budget,
                                  rhseed_rng* rng, int* action,
                                  int* fm_calls_used) {
  RHSEED_REQUIRE(agent);
  RHSEED_REQUIRE(game);
  RHSEED_REQUIRE(rng);
  RHSEED_REQUIRE(action);
  return guarded([&] {
    if (budget < 0) return fail(RHSEED_ERR_INVALID_ARGUMENT, "negative budget");
    rhseed::BudgetMeter meter(budget);
    *action = agent->agent.decide(game->state, meter, rng->rng).index;
    if (meter.used() > budget) {
      return fail(RHSEED_ERR_BUDGET_AUDIT, "decision overspent its budget");
    }
    if (fm_calls_used != nullptr) *fm_calls_used = meter.used();
    return RHSEED_OK;
  });
}

rhseed_status rhseed_play_game(const char* spec, const char* agent,
                               int population_size, int individual_length,
                               int budget, uint64_t run_seed,
                               rhseed_run_record* out) {
  RHSEED_REQUIRE(spec);
  RHSEED_REQUIRE(agent);
  RHSEED_REQUIRE(out);
  return guarded([&] {
    const auto kind = rhseed::parse_agent(agent);
    if (!kind) return fail(RHSEED_ERR_INVALID_ARGUMENT,
                           std::string("unknown agent '") + agent + "'");
    if (population_size < 1 || individual_length < 1 || budget < 0) {
      return fail(RHSEED_ERR_INVALID_ARGUMENT, "bad P, L or budget");
    }
    rhseed::AgentConfig config;
    config.kind = *kind;
    config.population_size = population_size;
    config.individual_length = individual_length;
    fill_record(rhseed::play_game(rhseed::GameSpec::parse(spec), config,
                                  budget, run_seed),
                out);
    return RHSEED_OK;
  });
}

uint64_t rhseed_derive_run_seed(uint64_t master_seed, const char* game,
                                int level, const char* agent,
                                int population_size, int individual_length,
                                int repeat_index) {
  return rhseed::derive_run_seed(
      master_seed, game != nullptr ? game : "", level,
      agent != nullptr ? agent : "",
      rhseed::PLConfig{population_size, individual_length}, repeat_index);
}

void rhseed_experiment_options_init(rhseed_experiment_options* o) {
  if (o == nullptr) return;
  const rhseed::ExperimentConfig defaults;
  o->games = nullptr;
  o->agents = nullptr;
  o->configs = nullptr;
  o->levels = nullptr;
  o->repeats = defaults.repeats_per_level;
  o->budget = defaults.budget;
  o->master_seed = defaults.master_seed;
  o->threads = 0;
}

rhseed_status rhseed_run_experiment(const rhseed_experiment_options* options,
                                    const char* out_dir,
                                    rhseed_progress_fn progress, void* user,
                                    size_t* records_written) {
  RHSEED_REQUIRE(options);
  RHSEED_REQUIRE(out_dir);
  return guarded([&] {
    rhseed::ExperimentConfig config;
    if (options->games != nullptr) config.games = rhseed::split_list(options->games);
    if (options->agents != nullptr) config.agents = rhseed::split_list(options->agents);
    if (options->configs != nullptr) config.configs = rhseed::parse_configs(options->configs);
    if (options->levels != nullptr) config.levels = rhseed::parse_levels(options->levels);
    config.repeats_per_level = options->repeats;
    config.budget = options->budget;
    config.master_seed = options->master_seed;
    rhseed::ProgressFn fn;
    if (progress != nullptr) {
      fn = [progress, user](std::size_t done, std::size_t total) {
        progress(done, total, user);
      };
    }
    const std::size_t n =
        rhseed::run_experiment_to_dir(config, out_dir, options->threads, fn);
    if (records_written != nullptr) *records_written = n;
    return RHSEED_OK;
  });
}

rhseed_status rhseed_report(const char* in_dir, const char* out_dir,
                            char** text) {
  RHSEED_REQUIRE(in_dir);
  return guarded([&] {
    const auto result =
        rhseed::report_dir(in_dir, out_dir != nullptr ? out_dir : in_dir);
    if (text != nullptr) *text = dup_string(result.text);
    if (result.audit_violations > 0) {
      return fail(RHSEED_ERR_BUDGET_AUDIT,
                  std::to_string(result.audit_violations) +
                      " runs exceed ticks * budget FM calls");
    }
    return RHSEED_OK;
  });
}

rhseed_status rhseed_mann_whitney(const double* xs, size_t nx,
                                  const double* ys, size_t ny,
                                  rhseed_mw_result* out) {
  RHSEED_REQUIRE(xs);
  RHSEED_REQUIRE(ys);
  RHSEED_REQUIRE(out);
  if (nx == 0 || ny == 0) {
    return fail(RHSEED_ERR_INVALID_ARGUMENT, "both samples must be non-empty");
  }
  return guarded([&] {
    const auto cell = rhseed::mann_whitney_u(std::span<const double>(xs, nx),
                                             std::span<const double>(ys, ny));
    out->u_xy = cell.u_xy;
    out->u_yx = cell.u_yx;
    out->p_two_tailed = cell.p_two_tailed;
    out->better = cell.better == rhseed::Better::kX   ? 1
                  : cell.better == rhseed::Better::kY ? 2
                                                      : 0;
    out->exact = cell.exact ? 1 : 0;
    return RHSEED_OK;
  });
}

rhseed_status rhseed_format_win_rate(int wins, int runs, char* buf,
                                     size_t buf_len) {
  RHSEED_REQUIRE(buf);
  if (runs <= 0 || wins < 0 || wins > runs || buf_len == 0) {
    return fail(RHSEED_ERR_INVALID_ARGUMENT, "need 0 <= wins <= runs, runs > 0");
  }
  const auto [rate, se] = rhseed::win_rate_with_se(wins, runs);
  const std::string cell = rhseed::format_with_se(rate, se);
  if (cell.size() >= buf_len) {
    return fail(RHSEED_ERR_INVALID_ARGUMENT, "buffer too small");
  }
  copy_field(buf, buf_len, cell);
  return RHSEED_OK;
}

}  // extern "C"
