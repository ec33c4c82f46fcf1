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

#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "core/budget.hpp"
#include "core/check.hpp"
#include "core/game.hpp"
#include "core/olmcts.hpp"

namespace rhseed {
namespace {

// A node whose root actions carry the given visits and mean values.
OLTree tree_with(std::vector<int> visits, std::vector<double> means) {
  OLTree tree(static_cast<int>(visits.size()));
  for (std::size_t a = 0; a < visits.size(); ++a) {
    tree.root->actions[a].visits = visits[a];
    tree.root->actions[a].total_value = means[a] * visits[a];
    tree.root->visits += visits[a];
  }
  return tree;
}

GameState long_corridor() { return GameState(std::make_unique<Corridor>(11)); }

TEST_CASE("ucb1_select examples") {
  OLTree one_unvisited = tree_with({4, 0}, {1.0, 0.0});
  one_unvisited.observe(0.0);
  one_unvisited.observe(1.0);
  CHECK(ucb1_select(*one_unvisited.root, one_unvisited, kDefaultUcbConstant).index == 1);

  // Lowest index among several unvisited.
  OLTree fresh(4);
  CHECK(ucb1_select(*fresh.root, fresh, kDefaultUcbConstant).index == 0);

  // Values 0..1 so the normalised means equal the raw means.
  OLTree equal = tree_with({5, 5}, {0.9, 0.1});
  equal.observe(0.0);
  equal.observe(1.0);
  CHECK(ucb1_select(*equal.root, equal, kDefaultUcbConstant).index == 0);

  OLTree skewed = tree_with({99, 1}, {0.6, 0.5});
  skewed.observe(0.0);
  skewed.observe(1.0);
  const double u0 = 0.6 + std::sqrt(2.0) * std::sqrt(std::log(100.0) / 99);
  const double u1 = 0.5 + std::sqrt(2.0) * std::sqrt(std::log(100.0) / 1);
  CHECK(u0 == doctest::Approx(0.90).epsilon(0.01));
  CHECK(u1 == doctest::Approx(3.53).epsilon(0.01));
  CHECK(ucb1_select(*skewed.root, skewed, kDefaultUcbConstant).index == 1);

  // Equal statistics tie to the lowest index.
  OLTree tie = tree_with({3, 3, 3}, {0.5, 0.5, 0.5});
  tie.observe(0.5);
  CHECK(ucb1_select(*tie.root, tie, kDefaultUcbConstant).index == 0);
}

TEST_CASE("normalisation uses the running min and max") {
  OLTree tree(2);
  CHECK(tree.normalize(42.0) == 0.5);
  tree.observe(3.0);
  CHECK(tree.normalize(3.0) == 0.5);
  tree.observe(7.0);
  CHECK(tree.normalize(3.0) == 0.0);
  CHECK(tree.normalize(7.0) == 1.0);
  CHECK(tree.normalize(4.0) == doctest::Approx(0.25));
}

TEST_CASE("a fresh iteration spends exactly rollout_depth calls") {
  Rng rng(1);
  OLTree tree(3);
  BudgetMeter meter(100);
  REQUIRE(mcts_iterate(long_corridor(), tree, MctsParams{}, meter, rng));
  CHECK(meter.used() == 6);
  CHECK(tree.root->visits == 1);
  CHECK(tree.root->actions[0].visits == 1);

  // Terminal earlier: the second iteration expands "right" next to the goal
  // and wins after one call.
  auto g = std::make_unique<Corridor>(3);
  g->set_position(2);
  GameState near(std::move(g));
  OLTree t2(3);
  BudgetMeter m2(100);
  Rng r2(0);
  mcts_iterate(near, t2, MctsParams{}, m2, r2);
  const int before = m2.used();
  mcts_iterate(near, t2, MctsParams{}, m2, r2);
  CHECK(m2.used() - before == 1);
  CHECK(t2.root->actions[Corridor::kRight].visits == 1);
}

TEST_CASE("root visits count complete iterations") {
  Rng rng(2);
  OLTree tree(3);
  BudgetMeter meter(10000);
  for (int k = 1; k <= 50; ++k) {
    REQUIRE(mcts_iterate(long_corridor(), tree, MctsParams{}, meter, rng));
    CHECK(tree.root->visits == k);
    CHECK(tree.iterations == k);
  }
}

TEST_CASE("bandit: the good arm collects more visits") {
  const GameState root(std::make_unique<Bandit>(0));
  int more = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    OLTree tree(2);
    BudgetMeter meter(1 << 20);
    for (int i = 0; i < 400; ++i) mcts_iterate(root, tree, MctsParams{}, meter, rng);
    more += tree.root->actions[0].visits > tree.root->actions[1].visits;
  }
  CHECK(more >= 90);
}

TEST_CASE("mcts_search budget arithmetic") {
  Rng rng(3);
  BudgetMeter meter(900);
  const OLTree tree = mcts_search(long_corridor(), MctsParams{}, meter, rng);
  CHECK(meter.used() == 900);
  CHECK(tree.iterations == 150);

  BudgetMeter none(0);
  const OLTree empty = mcts_search(long_corridor(), MctsParams{}, none, rng);
  CHECK(empty.root->visits == 0);
  CHECK(recommend(empty).degenerate);
  CHECK(recommend(empty).action.index == 0);

  BudgetMeter shared(900);
  BudgetMeter first(450);
  mcts_search(long_corridor(), MctsParams{}, first, rng);
  REQUIRE(shared.try_consume(first.used()));
  BudgetMeter second(shared.remaining());
  mcts_search(long_corridor(), MctsParams{}, second, rng);
  REQUIRE(shared.try_consume(second.used()));
  CHECK(shared.used() == 900);
}

TEST_CASE("a budget that runs out mid-iteration still backs up") {
  Rng rng(4);
  OLTree tree(3);
  BudgetMeter meter(3);
  REQUIRE(mcts_iterate(long_corridor(), tree, MctsParams{}, meter, rng));
  CHECK(meter.used() == 3);
  CHECK(tree.root->visits == 1);
  CHECK_FALSE(mcts_iterate(long_corridor(), tree, MctsParams{}, meter, rng));
  CHECK(tree.root->visits == 1);
}

TEST_CASE("recommend examples") {
  CHECK(recommend(tree_with({10, 3, 2}, {0, 0, 0})).action.index == 0);
  CHECK(recommend(tree_with({5, 5}, {0, 1})).action.index == 0);
  CHECK(recommend(tree_with({1, 7, 2}, {9, 0, 0})).action.index == 1);
  CHECK_FALSE(recommend(tree_with({1, 7, 2}, {9, 0, 0})).degenerate);

  const GameState root(std::make_unique<Bandit>(1));
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    BudgetMeter meter(kDefaultBudget);
    good += recommend(mcts_search(root, MctsParams{}, meter, rng)).action.index == 1;
  }
  CHECK(good >= 90);
}

TEST_CASE("recommend ignores positive rescaling of values") {
  Rng rng(5);
  for (const auto& name : game_names()) {
    BudgetMeter meter(300);
    OLTree tree = mcts_search(make_initial_state(name, 2), MctsParams{}, meter, rng);
    const ActionId before = recommend(tree).action;
    for (ActionStats& s : tree.root->actions) s.total_value *= 1234.5;
    CHECK(recommend(tree).action == before);
  }
}

TEST_CASE("principal path examples") {
  OLTree stop = tree_with({10, 2}, {0, 0});
  stop.root->actions[0].child = std::make_unique<OLTreeNode>(2);
  stop.root->actions[0].child->actions[0].visits = 2;
  stop.root->actions[0].child->actions[1].visits = 1;
  CHECK(extract_principal_path(stop, 6, 3) == std::vector<int>{0});

  CHECK(extract_principal_path(tree_with({2, 2, 1}, {0, 0, 0}), 6, 3).empty());

  // A chain deeper than L is cut at L.
  OLTree chain(2);
  OLTreeNode* node = chain.root.get();
  for (int d = 0; d < 10; ++d) {
    node->visits = 5;
    node->actions[1].visits = 5;
    node->actions[1].child = std::make_unique<OLTreeNode>(2);
    node = node->actions[1].child.get();
  }
  CHECK(extract_principal_path(chain, 6, 3) == std::vector<int>(6, 1));

  // Missing child stops descent.
  OLTree leaf = tree_with({0, 4}, {0, 0});
  CHECK(extract_principal_path(leaf, 6, 3) == std::vector<int>{1});
}

TEST_CASE("search invariants over every game") {
  for (const auto& name : game_names()) {
    for (int level = 0; level < kNumLevels; ++level) {
      for (int depth : {1, 6, 14}) {
        Rng rng(level * 7 + depth);
        BudgetMeter meter(kDefaultBudget);
        MctsParams params;
        params.rollout_depth = depth;
        const GameState root = make_initial_state(name, level);
        const OLTree tree = mcts_search(root, params, meter, rng);
        CHECK(meter.used() <= meter.limit());
        const TreeAudit audit = audit_tree(tree);
        CHECK(audit.violations == 0);
        CHECK(audit.nodes >= 1);
        CHECK(tree.root->visits == tree.iterations);
        for (const ActionStats& s : tree.root->actions) {
          if (s.visits == 0) continue;
          const double q = tree.normalize(s.mean());
          CHECK(q >= 0.0);
          CHECK(q <= 1.0);
        }
        // Genes along the path are legal at their node.
        const std::vector<int> path = extract_principal_path(tree, depth, 3);
        const OLTreeNode* node = tree.root.get();
        for (int gene : path) {
          REQUIRE(node != nullptr);
          CHECK(gene < node->action_count());
          node = node->actions[gene].child.get();
        }
      }
    }
  }
}

TEST_CASE("search contracts") {
  Rng rng(0);
  auto g = std::make_unique<Corridor>(1);
  GameState done(std::move(g));
  done.advance_in_place(ActionId{Corridor::kRight}, rng);
  OLTree tree(1);
  BudgetMeter meter(10);
  CHECK_THROWS_AS(mcts_iterate(done, tree, MctsParams{}, meter, rng), ContractViolation);
  MctsParams bad;
  bad.rollout_depth = 0;
  CHECK_THROWS_AS(mcts_iterate(long_corridor(), tree, bad, meter, rng), ContractViolation);
}

}  // namespace
}  // namespace rhseed
