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

#include "core/seeding.hpp"

#include <cmath>

#include "core/check.hpp"

namespace rhseed {

namespace {

void pad_random(std::vector<int>& genes, int length, int root_actions,
                Rng& rng) {
  while (static_cast<int>(genes.size()) < length) {
    genes.push_back(rng.uniform_int(root_actions));
  }
}

}  // namespace

std::vector<int> one_step_lookahead_seed(const GameState& root, int length,
                                         BudgetMeter& meter, Rng& rng) {
  RHSEED_CHECK(!root.is_terminal(), "seeding from a terminal root");
  RHSEED_CHECK(length >= 1, "seed length must be >= 1");
  const int root_actions = root.legal_actions();
  std::vector<int> genes;
  genes.reserve(length);

  GameState state = root;
  while (static_cast<int>(genes.size()) < length && !state.is_terminal()) {
    const int n = state.legal_actions();
    int best = -1;
    double best_value = 0.0;
    std::optional<GameState> best_next;
    bool out_of_budget = false;
    for (int a = 0; a < n; ++a) {
      if (!meter.try_consume(1)) {
        out_of_budget = true;
        break;
      }
      GameState next = advance(state, ActionId{a}, rng);
      const double value = heuristic_value(next).value;
      if (best < 0 || value > best_value) {
        best = a;
        best_value = value;
        best_next = std::move(next);
      }
    }
    if (out_of_budget) break;
    genes.push_back(best);
    state = std::move(*best_next);
  }
  pad_random(genes, length, root_actions, rng);
  return genes;
}

std::vector<int> mcts_seed(const GameState& root, int length,
                           BudgetMeter& meter, const MctsParams& params,
                           double fraction, Rng& rng,
                           const TreeObserver* observer) {
  RHSEED_CHECK(!root.is_terminal(), "seeding from a terminal root");
  RHSEED_CHECK(fraction > 0.0 && fraction < 1.0, "fraction must be in (0,1)");
  const int allowance = std::min(
      static_cast<int>(std::floor(fraction * meter.limit())), meter.remaining());
  BudgetMeter inner(allowance);
  OLTree tree = mcts_search(root, params, inner, rng);
  if (inner.used() > 0) meter.try_consume(inner.used());
  if (observer != nullptr && *observer) (*observer)(tree);

  std::vector<int> genes =
      extract_principal_path(tree, length, params.min_visits_relevant);
  pad_random(genes, length, root.legal_actions(), rng);
  return genes;
}

Population seed_population(const std::vector<int>& seed_genes,
                           int population_size, int root_actions, Rng& rng) {
  RHSEED_CHECK(population_size >= 1, "population size must be >= 1");
  RHSEED_CHECK(!seed_genes.empty(), "empty seed");
  Population pop;
  pop.reserve(population_size);
  Individual seed;
  seed.genes = seed_genes;
  pop.push_back(seed);
  for (int i = 1; i < population_size; ++i) {
    pop.push_back(mutate(seed, root_actions, rng));
  }
  return pop;
}

Seeder make_seeder(const SeedingStrategy& strategy, double exploration,
                   const TreeObserver* observer) {
  switch (strategy.kind) {
    case SeedingStrategy::Kind::kNone:
      return {};
    case SeedingStrategy::Kind::kOneStepLookAhead:
      return [](const GameState& root, int length, BudgetMeter& meter,
                Rng& rng) {
        return one_step_lookahead_seed(root, length, meter, rng);
      };
    case SeedingStrategy::Kind::kMctsSeed:
      return [strategy, exploration, observer](const GameState& root,
                                               int length, BudgetMeter& meter,
                                               Rng& rng) {
        MctsParams params;
        params.exploration = exploration;
        params.rollout_depth = length;
        params.min_visits_relevant = strategy.min_visits;
        return mcts_seed(root, length, meter, params, strategy.fraction, rng,
                         observer);
      };
  }
  return {};
}

}  // namespace rhseed
