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

#ifndef RHSEED_CORE_RHEA_HPP_
#define RHSEED_CORE_RHEA_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "core/budget.hpp"
#include "core/game.hpp"
#include "core/rng.hpp"

namespace rhseed {

// A fixed-length action plan. Genes are root-relative action indices in
// [0, N_root) and are decoded with decode_gene() during replay.
struct Individual {
  std::vector<int> genes;
  std::optional<double> fitness;
  bool partial = false;

  bool evaluated() const { return fitness.has_value(); }
  // Unevaluated members rank below every evaluated one.
  double rank_value() const;
};

// Members are kept sorted by descending fitness between generations
// (stable, so ties keep their earlier position).
using Population = std::vector<Individual>;

struct RheaParams {
  int population_size = 1;     // P
  int individual_length = 6;   // L
  int tournament_size = 2;
  int elite_count = 1;
};

void sort_population(Population& pop);

Population init_random_population(int population_size, int length,
                                  int root_actions, Rng& rng);

// Changes exactly one uniformly chosen gene to a different value, uniform
// over the other root_actions - 1 values. Identity when root_actions == 1.
Individual mutate(const Individual& parent, int root_actions, Rng& rng);

Individual uniform_crossover(const Individual& a, const Individual& b,
                             Rng& rng);

// Size-2 tournament over distinct members; the fitter one wins, ties go to
// the lower index. Requires at least two members.
const Individual& tournament_select(const Population& pop, Rng& rng);

// Evaluates every unevaluated member that the meter can still afford.
// Returns false if the meter ran out before all members were evaluated.
bool evaluate_population(Population& pop, const GameState& root,
                         BudgetMeter& meter, Rng& rng);

Population next_generation(const Population& pop, const RheaParams& params,
                           const GameState& root, BudgetMeter& meter,
                           Rng& rng);

// Produces the initial genes of individual 0 of a seeded population. The
// seeder is charged to the same meter as the evolution that follows.
using Seeder = std::function<std::vector<int>(const GameState& root, int length,
                                              BudgetMeter& meter, Rng& rng)>;

struct RheaTrace {
  int generations = 0;
  std::vector<double> best_per_generation;  // index 0 is the initial population
  Population final_population;
};

// Evolves plans until the budget is spent and returns the decoded first gene
// of the best individual. `trace`, when given, records the run.
ActionId rhea_decide(const GameState& root, const RheaParams& params,
                     BudgetMeter& meter, const Seeder* seeder, Rng& rng,
                     RheaTrace* trace = nullptr);

}  // namespace rhseed

#endif  // RHSEED_CORE_RHEA_HPP_
