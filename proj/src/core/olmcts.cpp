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

#include "core/olmcts.hpp"

#include <utility>

#include "core/check.hpp"

namespace rhseed {

ActionId ucb1_select(const OLTreeNode& node, const OLTree& tree,
                     double exploration) {
  RHSEED_CHECK(node.action_count() >= 1, "node without actions");
  for (int a = 0; a < node.action_count(); ++a) {
    if (node.actions[a].visits == 0) return ActionId{a};
  }
  const double log_n = std::log(static_cast<double>(node.visits));
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < node.action_count(); ++a) {
    const ActionStats& s = node.actions[a];
    const double value = tree.normalize(s.mean()) +
                         exploration * std::sqrt(log_n / s.visits);
    if (value > best_value) {
      best_value = value;
      best = a;
    }
  }
  return ActionId{best};
}

bool mcts_iterate(const GameState& root_state, OLTree& tree,
                  const MctsParams& params, BudgetMeter& meter, Rng& rng) {
  RHSEED_CHECK(!root_state.is_terminal(), "search from a terminal root");
  RHSEED_CHECK(params.rollout_depth >= 1, "rollout depth must be >= 1");
  if (!meter.try_consume(1)) return false;

  GameState state = root_state;
  std::vector<std::pair<OLTreeNode*, int>> path;
  OLTreeNode* node = tree.root.get();
  int depth = 0;
  bool paid = true;  // the first advance was charged up front

  // Selection and expansion: walk the tree until an unvisited action is
  // taken (which adds a child) or the state ends.
  while (true) {
    // Open loop: the same node can see different action counts.
    if (node->action_count() < state.legal_actions()) {
      node->actions.resize(state.legal_actions());
    }
    const ActionId a = ucb1_select(*node, tree, params.exploration);
    if (!paid && !meter.try_consume(1)) break;
    paid = false;
    const bool expanding = node->actions[a.index].visits == 0;
    state.advance_in_place(decode_gene(a.index, state), rng);
    ++depth;
    path.emplace_back(node, a.index);
    ActionStats& stats = node->actions[a.index];
    if (!stats.child) {
      stats.child = std::make_unique<OLTreeNode>(state.legal_actions());
    }
    node = stats.child.get();
    if (expanding || state.is_terminal() || depth >= params.rollout_depth) {
      break;
    }
  }

  // Rollout: uniform random actions out to rollout_depth from the root.
  while (depth < params.rollout_depth && !state.is_terminal() &&
         meter.try_consume(1)) {
    state.advance_in_place(ActionId{rng.uniform_int(state.legal_actions())},
                           rng);
    ++depth;
  }

  const double value = heuristic_value(state).value;
  tree.observe(value);
  for (auto& [n, a] : path) {
    ++n->visits;
    ++n->actions[a].visits;
    n->actions[a].total_value += value;
  }
  ++tree.iterations;
  return true;
}

OLTree mcts_search(const GameState& root_state, const MctsParams& params,
                   BudgetMeter& meter, Rng& rng) {
  OLTree tree(root_state.legal_actions());
  while (mcts_iterate(root_state, tree, params, meter, rng)) {
  }
  return tree;
}

Recommendation recommend(const OLTree& tree) {
  const OLTreeNode& root = *tree.root;
  if (root.visits == 0) return {ActionId{0}, true};
  int best = 0;
  for (int a = 1; a < root.action_count(); ++a) {
    if (root.actions[a].visits > root.actions[best].visits) best = a;
  }
  return {ActionId{best}, false};
}

std::vector<int> extract_principal_path(const OLTree& tree, int max_len,
                                        int min_visits) {
  std::vector<int> path;
  const OLTreeNode* node = tree.root.get();
  while (node != nullptr && static_cast<int>(path.size()) < max_len) {
    int best = -1;
    for (int a = 0; a < node->action_count(); ++a) {
      const int v = node->actions[a].visits;
      if (v >= min_visits && (best < 0 || v > node->actions[best].visits)) {
        best = a;
      }
    }
    if (best < 0) break;
    path.push_back(best);
    node = node->actions[best].child.get();
  }
  return path;
}

namespace {

void audit_node(const OLTreeNode& node, TreeAudit& audit) {
  ++audit.nodes;
  long sum = 0;
  for (const ActionStats& s : node.actions) {
    sum += s.visits;
    if (s.child) audit_node(*s.child, audit);
  }
  if (sum != node.visits) ++audit.violations;
}

}  // namespace

TreeAudit audit_tree(const OLTree& tree) {
  TreeAudit audit;
  audit_node(*tree.root, audit);
  return audit;
}

}  // namespace rhseed
