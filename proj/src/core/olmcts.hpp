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

#ifndef RHSEED_CORE_OLMCTS_HPP_
#define RHSEED_CORE_OLMCTS_HPP_

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "core/budget.hpp"
#include "core/game.hpp"
#include "core/rng.hpp"

namespace rhseed {

struct OLTreeNode;

struct ActionStats {
  int visits = 0;            // N(s,a)
  double total_value = 0.0;  // sum of backed-up values
  std::unique_ptr<OLTreeNode> child;

  double mean() const { return visits > 0 ? total_value / visits : 0.0; }
};

// Open-loop node: statistics only, never a game state. `visits` counts the
// actions taken from this node, so sum_a N(s,a) == N(s) always holds.
struct OLTreeNode {
  int visits = 0;  // N(s)
  std::vector<ActionStats> actions;

  explicit OLTreeNode(int action_count) : actions(action_count) {}
  int action_count() const { return static_cast<int>(actions.size()); }
};

struct OLTree {
  std::unique_ptr<OLTreeNode> root;
  // Running bounds over every backed-up value, for normalizing Q to [0, 1].
  double min_value = std::numeric_limits<double>::infinity();
  double max_value = -std::numeric_limits<double>::infinity();
  int iterations = 0;

  explicit OLTree(int root_actions)
      : root(std::make_unique<OLTreeNode>(root_actions)) {}

  // Q mapped into [0, 1]; 0.5 when no spread has been observed yet.
  double normalize(double q) const {
    if (!(max_value > min_value)) return 0.5;
    return (q - min_value) / (max_value - min_value);
  }
  void observe(double value) {
    min_value = std::min(min_value, value);
    max_value = std::max(max_value, value);
  }
};

inline const double kDefaultUcbConstant = std::sqrt(2.0);

struct MctsParams {
  double exploration = kDefaultUcbConstant;  // C
  int rollout_depth = 6;                     // measured from the root
  int min_visits_relevant = 3;               // M
};

// Lowest-index unvisited action if any; otherwise the UCB1 argmax over
// normalized Q (ties to the lowest index).
ActionId ucb1_select(const OLTreeNode& node, const OLTree& tree,
                     double exploration);

// One selection/expansion/rollout/backup pass. Returns false without touching
// the tree when the meter cannot pay for the first advance.
bool mcts_iterate(const GameState& root_state, OLTree& tree,
                  const MctsParams& params, BudgetMeter& meter, Rng& rng);

OLTree mcts_search(const GameState& root_state, const MctsParams& params,
                   BudgetMeter& meter, Rng& rng);

struct Recommendation {
  ActionId action;
  bool degenerate = false;  // the tree had no visits
};

// Most-visited root action, ties to the lowest index.
Recommendation recommend(const OLTree& tree);

// Follows most-visited actions with N(s,a) >= min_visits from the root,
// stopping at max_len genes or when no action qualifies.
std::vector<int> extract_principal_path(const OLTree& tree, int max_len,
                                        int min_visits);

struct TreeAudit {
  long nodes = 0;
  long violations = 0;  // nodes where sum_a N(s,a) != N(s)
};

TreeAudit audit_tree(const OLTree& tree);

// Called after each completed search; used by the harness to audit trees.
using TreeObserver = std::function<void(const OLTree&)>;

}  // namespace rhseed

#endif  // RHSEED_CORE_OLMCTS_HPP_
