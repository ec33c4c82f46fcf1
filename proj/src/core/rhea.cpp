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

#include "core/rhea.hpp"

#include <algorithm>
#include <limits>

#include "core/check.hpp"
#include "core/seeding.hpp"

namespace rhseed {

double Individual::rank_value() const {
  return fitness.value_or(-std::numeric_limits<double>::infinity());
}

void sort_population(Population& pop) {
  std::stable_sort(pop.begin(), pop.end(),
                   [](const Individual& a, const Individual& b) {
                     return a.rank_value() > b.rank_value();
                   });
}

Population init_random_population(int population_size, int length,
                                  int root_actions, Rng& rng) {
  RHSEED_CHECK(population_size >= 1, "population size must be >= 1");
  RHSEED_CHECK(length >= 1, "individual length must be >= 1");
  RHSEED_CHECK(root_actions >= 1, "need at least one root action");
  Population pop(population_size);
  for (Individual& ind : pop) {
    ind.genes.resize(length);
    for (int& g : ind.genes) g = rng.uniform_int(root_actions);
  }
  return pop;
}

Individual mutate(const Individual& parent, int root_actions, Rng& rng) {
  RHSEED_CHECK(root_actions >= 1, "need at least one root action");
  RHSEED_CHECK(!parent.genes.empty(), "cannot mutate an empty individual");
  Individual child;
  child.genes = parent.genes;
  if (root_actions == 1) return child;
  const int pos = rng.uniform_int(static_cast<int>(child.genes.size()));
  int value = rng.uniform_int(root_actions - 1);
  if (value >= child.genes[pos]) ++value;
  child.genes[pos] = value;
  return child;
}

Individual uniform_crossover(const Individual& a, const Individual& b,
                             Rng& rng) {
  RHSEED_CHECK(a.genes.size() == b.genes.size(),
               "crossover parents differ in length");
  Individual child;
  child.genes.resize(a.genes.size());
  for (std::size_t i = 0; i < a.genes.size(); ++i) {
    child.genes[i] = rng.bernoulli(0.5) ? a.genes[i] : b.genes[i];
  }
  return child;
}

const Individual& tournament_select(const Population& pop, Rng& rng) {
  const int n = static_cast<int>(pop.size());
  RHSEED_CHECK(n >= 2, "tournament needs at least two members");
  int i = rng.uniform_int(n);
  int j = rng.uniform_int(n - 1);
  if (j >= i) ++j;
  if (i > j) std::swap(i, j);
  return pop[j].rank_value() > pop[i].rank_value() ? pop[j] : pop[i];
}

namespace {

void evaluate(Individual& ind, const GameState& root, BudgetMeter& meter,
              Rng& rng) {
  const Fitness f = evaluate_sequence(root, ind.genes, meter, rng);
  ind.fitness = f.value;
  ind.partial = f.partial;
}

}  // namespace

bool evaluate_population(Population& pop, const GameState& root,
                         BudgetMeter& meter, Rng& rng) {
  for (Individual& ind : pop) {
    if (ind.evaluated()) continue;
    if (meter.exhausted()) return false;
    evaluate(ind, root, meter, rng);
  }
  return true;
}

Population next_generation(const Population& pop, const RheaParams& params,
                           const GameState& root, BudgetMeter& meter,
                           Rng& rng) {
  const int size = static_cast<int>(pop.size());
  RHSEED_CHECK(size == params.population_size, "population size drifted");
  const int root_actions = root.legal_actions();

  if (size == 1) {
    // Keep-better hill climbing: the mutant replaces the parent on >=.
    if (meter.exhausted()) return pop;
    Individual child = mutate(pop[0], root_actions, rng);
    evaluate(child, root, meter, rng);
    if (child.rank_value() >= pop[0].rank_value()) return {std::move(child)};
    return pop;
  }

  const int elites = std::clamp(params.elite_count, 0, size);
  Population next(pop.begin(), pop.begin() + elites);
  while (static_cast<int>(next.size()) < size && !meter.exhausted()) {
    Individual child =
        size == 2 ? uniform_crossover(pop[0], pop[1], rng)
                  : uniform_crossover(tournament_select(pop, rng),
                                      tournament_select(pop, rng), rng);
    child = mutate(child, root_actions, rng);
    evaluate(child, root, meter, rng);
    next.push_back(std::move(child));
  }
  // Budget ran out mid-generation: refill from the previous ranking.
  for (int i = elites; static_cast<int>(next.size()) < size; ++i) {
    next.push_back(pop[i]);
  }
  sort_population(next);
  return next;
}

ActionId rhea_decide(const GameState& root, const RheaParams& params,
                     BudgetMeter& meter, const Seeder* seeder, Rng& rng,
                     RheaTrace* trace) {
  RHSEED_CHECK(!root.is_terminal(), "rhea_decide on a terminal root");
  RHSEED_CHECK(params.population_size >= 1 && params.individual_length >= 1,
               "P and L must be positive");
  const int root_actions = root.legal_actions();

  Population pop;
  if (seeder != nullptr && *seeder) {
    std::vector<int> seed =
        (*seeder)(root, params.individual_length, meter, rng);
    pop = seed_population(seed, params.population_size, root_actions, rng);
  } else {
    pop = init_random_population(params.population_size,
                                 params.individual_length, root_actions, rng);
  }
  evaluate_population(pop, root, meter, rng);
  sort_population(pop);
  if (trace != nullptr) trace->best_per_generation.push_back(pop[0].rank_value());

  while (!meter.exhausted()) {
    pop = next_generation(pop, params, root, meter, rng);
    if (trace != nullptr) {
      ++trace->generations;
      trace->best_per_generation.push_back(pop[0].rank_value());
    }
  }

  const ActionId action = decode_gene(pop[0].genes[0], root);
  if (trace != nullptr) trace->final_population = std::move(pop);
  return action;
}

}  // namespace rhseed
