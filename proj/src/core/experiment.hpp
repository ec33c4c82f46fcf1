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

#ifndef RHSEED_CORE_EXPERIMENT_HPP_
#define RHSEED_CORE_EXPERIMENT_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core/agent.hpp"
#include "core/game.hpp"
#include "core/olmcts.hpp"

namespace rhseed {

struct PLConfig {
  int population_size = 1;
  int individual_length = 6;
  bool operator==(const PLConfig&) const = default;
  auto operator<=>(const PLConfig&) const = default;
};

// (1,6), (2,8), (5,10), (10,14), (15,16), (20,20).
const std::vector<PLConfig>& default_configs();

struct ExperimentConfig {
  std::vector<std::string> games = game_names();
  std::vector<int> levels = {0, 1, 2, 3, 4};
  int repeats_per_level = 20;
  std::vector<PLConfig> configs = default_configs();
  int budget = kDefaultBudget;
  std::vector<std::string> agents = {"vanilla", "1sla-seed", "mcts-seed",
                                     "olmcts"};
  std::uint64_t master_seed = 0;

  // Throws std::invalid_argument on unknown names or empty/invalid fields.
  void validate() const;
  std::size_t run_count() const;
};

struct RunRecord {
  std::string game;
  int level = 0;
  std::string agent;
  int population_size = 0;
  int individual_length = 0;
  bool win = false;
  double final_score = 0.0;
  int ticks = 0;
  long long fm_calls_total = 0;
  std::uint64_t run_seed = 0;

  bool operator==(const RunRecord&) const = default;
};

// A decision used more forward-model calls than its budget, or a record
// claims more calls than ticks * budget.
class BudgetAuditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view game,
                              int level, std::string_view agent,
                              PLConfig config, int repeat_index);

// Plays one game to the end. Every tick the agent gets a fresh meter of
// `budget` calls; the real advance is not metered. Throws BudgetAuditError if
// a decision overspends.
RunRecord play_game(const GameSpec& spec, const AgentConfig& agent, int budget,
                    std::uint64_t run_seed,
                    const TreeObserver* observer = nullptr);

struct RunKey {
  std::string game;
  int level = 0;
  std::string agent;
  PLConfig config;
  int repeat = 0;
};

// Cross product in the order agents x games x configs x levels x repeats.
std::vector<RunKey> enumerate_runs(const ExperimentConfig& config);

RunRecord run_single(const ExperimentConfig& config, const RunKey& key,
                     const TreeObserver* observer = nullptr);

using RecordSink = std::function<void(const RunRecord&)>;

// Runs the whole grid on `threads` workers (0 = hardware concurrency).
// `sink` sees each record as it completes, serialized under a lock. The
// returned records are in enumerate_runs() order. `observer` may be called
// concurrently from several workers.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config,
                                      const RecordSink& sink = {},
                                      int threads = 0,
                                      const TreeObserver* observer = nullptr);

bool budget_audit_ok(const RunRecord& record, int budget);

// --- Parsing helpers for the CLI -------------------------------------------

std::vector<std::string> split_list(std::string_view text, char sep = ',');
// "1x6,2x8"
std::vector<PLConfig> parse_configs(std::string_view text);
// "0..4" or "0,2,3"
std::vector<int> parse_levels(std::string_view text);

// --- CSV --------------------------------------------------------------------

inline constexpr std::string_view kRunsCsvHeader =
    "game,level,agent,P,L,win,score,ticks,fm_calls,seed";

std::string format_double(double value);
std::string to_csv_row(const RunRecord& record);
RunRecord parse_csv_row(std::string_view line);
void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_runs_csv(std::istream& in);

}  // namespace rhseed

#endif  // RHSEED_CORE_EXPERIMENT_HPP_
