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

#ifndef RHSEED_CORE_SEEDING_HPP_
#define RHSEED_CORE_SEEDING_HPP_

#include <string_view>
#include <vector>

#include "core/budget.hpp"
#include "core/game.hpp"
#include "core/olmcts.hpp"
#include "core/rhea.hpp"
#include "core/rng.hpp"

namespace rhseed {

struct SeedingStrategy {
  enum class Kind { kNone, kOneStepLookAhead, kMctsSeed };
  Kind kind = Kind::kNone;
  double fraction = 0.5;  // share of the decision budget given to MCTS
  int min_visits = 3;     // M
};

// Greedy plan: at each step every legal action is tried once (one FM call
// each) and the best successor is kept. Pads with uniform random root-relative
// genes once the state ends or the meter runs dry. Always returns `length`
// genes.
std::vector<int> one_step_lookahead_seed(const GameState& root, int length,
                                         BudgetMeter& meter, Rng& rng);

// Runs MCTS on floor(fraction * meter.limit()) calls of the same meter and
// returns the principal path, padded with random genes to `length`.
std::vector<int> mcts_seed(const GameState& root, int length,
                           BudgetMeter& meter, const MctsParams& params,
                           double fraction, Rng& rng,
                           const TreeObserver* observer = nullptr);

// Member 0 is the seed; every other member is one mutation away from it.
Population seed_population(const std::vector<int>& seed_genes,
                           int population_size, int root_actions, Rng& rng);

// Wraps a strategy as an rhea_decide seeder. Returns an empty Seeder for
// Kind::kNone. `observer` must outlive the returned seeder.
Seeder make_seeder(const SeedingStrategy& strategy, double exploration,
                   const TreeObserver* observer = nullptr);

}  // namespace rhseed

#endif  // RHSEED_CORE_SEEDING_HPP_
