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

#ifndef RHSEED_CORE_REPORT_HPP_
#define RHSEED_CORE_REPORT_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "core/experiment.hpp"
#include "core/stats.hpp"

namespace rhseed {

// Win rate and mean score of one agent on one game under one (P, L), pooled
// over levels. Win rates are percentages; their standard error is the
// binomial one, scaled the same way.
struct AgentSummary {
  std::string game;
  PLConfig config;
  std::string agent;
  int runs = 0;
  int wins = 0;
  double win_rate = 0.0;
  double win_rate_se = 0.0;
  double mean_score = 0.0;
  double score_se = 0.0;
};

struct PairwiseComparison {
  std::string game;
  PLConfig config;
  std::string agent_x;
  std::string agent_y;
  SignificanceCell wins;
  SignificanceCell scores;
  std::string better_wins;    // empty when not significant
  std::string better_scores;
};

// Number of games in which `agent` is significantly better than `versus`
// (or than every other agent when `versus` is empty).
struct BetterCount {
  std::string agent;
  std::string versus;
  int wins = 0;
  int scores = 0;
  std::vector<std::string> win_games;
  std::vector<std::string> score_games;
};

struct ConfigBetterCounts {
  PLConfig config;
  std::vector<BetterCount> counts;
};

struct Report {
  std::vector<std::string> agents;
  std::vector<std::string> games;
  std::vector<PLConfig> configs;
  std::vector<AgentSummary> summaries;
  std::vector<PairwiseComparison> pairwise;
  std::vector<ConfigBetterCounts> per_config;
  // Unique games across all configs.
  std::vector<BetterCount> unions;
};

// Pure function of the record multiset. Requires records to be non-empty.
Report summarize(const std::vector<RunRecord>& records);

// "87.00 (3.36)"
std::string format_with_se(double value, double se);

// Win-rate percentage and its binomial standard error.
std::pair<double, double> win_rate_with_se(int wins, int runs);

const BetterCount* find_count(const ConfigBetterCounts& counts,
                              const std::string& agent,
                              const std::string& versus);

std::string report_to_text(const Report& report);
std::string report_to_json(const Report& report);
void write_summary_csv(std::ostream& out, const Report& report);

}  // namespace rhseed

#endif  // RHSEED_CORE_REPORT_HPP_
