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

#include "core/budget.hpp"

#include "core/check.hpp"

namespace rhseed {

BudgetMeter::BudgetMeter(int limit) : limit_(limit) {
  RHSEED_CHECK(limit >= 0, "budget limit must be non-negative");
}

bool BudgetMeter::try_consume(int n) {
  RHSEED_CHECK(n >= 1, "try_consume needs n >= 1");
  if (n > limit_ - used_) return false;
  used_ += n;
  return true;
}

Fitness heuristic_value(const GameState& state) {
  switch (state.outcome()) {
    case Outcome::kWin:
      return {state.score() + kWinBonus, false};
    case Outcome::kLoss:
      return {state.score() + kLossPenalty, false};
    case Outcome::kOngoing:
      break;
  }
  return {state.score(), false};
}

ActionId decode_gene(int gene, const GameState& state) {
  RHSEED_CHECK(gene >= 0, "genes are non-negative");
  return ActionId{gene % state.legal_actions()};
}

Fitness evaluate_sequence(const GameState& root, std::span<const int> genes,
                          BudgetMeter& meter, Rng& rng) {
  RHSEED_CHECK(!genes.empty(), "cannot evaluate an empty sequence");
  GameState state = root;
  bool partial = false;
  for (int gene : genes) {
    if (state.is_terminal()) break;
    if (!meter.try_consume(1)) {
      partial = true;
      break;
    }
    state.advance_in_place(decode_gene(gene, state), rng);
  }
  Fitness fitness = heuristic_value(state);
  fitness.partial = partial;
  return fitness;
}

}  // namespace rhseed
