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

#ifndef RHSEED_CORE_BUDGET_HPP_
#define RHSEED_CORE_BUDGET_HPP_

#include <span>

#include "core/game.hpp"
#include "core/rng.hpp"

namespace rhseed {

inline constexpr int kDefaultBudget = 900;

// Forward-model call allowance for one decision. One advance is one call;
// copying a state is free.
class BudgetMeter {
 public:
  explicit BudgetMeter(int limit);

  // Consumes n calls if they fit and returns true; otherwise leaves the meter
  // untouched and returns false.
  bool try_consume(int n = 1);

  int limit() const { return limit_; }
  int used() const { return used_; }
  int remaining() const { return limit_ - used_; }
  bool exhausted() const { return used_ >= limit_; }

 private:
  int limit_;
  int used_ = 0;
};

inline constexpr double kWinBonus = 1e7;
inline constexpr double kLossPenalty = -1e7;

struct Fitness {
  double value = 0.0;
  // Set when the budget ran out before the sequence was fully replayed.
  bool partial = false;
};

// Game score, shifted by kWinBonus / kLossPenalty on terminal states.
Fitness heuristic_value(const GameState& state);

// Root-relative gene to legal action at `state`: gene mod legal_actions.
ActionId decode_gene(int gene, const GameState& state);

// Replays `genes` from a copy of `root`, one FM call per advance, stopping at
// a terminal state or when the meter refuses. Returns the heuristic value of
// the last state reached.
Fitness evaluate_sequence(const GameState& root, std::span<const int> genes,
                          BudgetMeter& meter, Rng& rng);

}  // namespace rhseed

#endif  // RHSEED_CORE_BUDGET_HPP_
