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

#include <memory>
#include <string>
#include <vector>

#include "core/budget.hpp"
#include "core/check.hpp"
#include "core/game.hpp"
#include "core/olmcts.hpp"
#include "core/rhea.hpp"
#include "core/seeding.hpp"

namespace rhseed {
namespace {

// One legal action everywhere; never ends before max_ticks.
class Treadmill final : public Game {
 public:
  Treadmill() : Game(kDefaultMaxTicks) {}
  std::unique_ptr<Game> clone() const override {
    return std::make_unique<Treadmill>(*this);
  }
  std::string_view name() const override { return "treadmill"; }
  std::string to_string() const override { return "treadmill"; }
  bool is_stochastic() const override { return false; }

 protected:
  int action_count() const override { return 1; }
  void apply(ActionId, Rng&) override {}
  bool payload_equals(const Game&) const override { return true; }
};

int hamming(const std::vector<int>& a, const std::vector<int>& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

TEST_CASE("1SLA on Corridor walks right and pads after the win") {
  const GameState root(std::make_unique<Corridor>(3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    BudgetMeter meter(900);
    const std::vector<int> genes = one_step_lookahead_seed(root, 6, meter, rng);
    REQUIRE(genes.size() == 6);
    CHECK(genes[0] == Corridor::kRight);
    CHECK(genes[1] == Corridor::kRight);
    CHECK(genes[2] == Corridor::kRight);
    for (int i = 3; i < 6; ++i) CHECK(genes[i] < 3);
    CHECK(meter.used() == 9);
  }
}

TEST_CASE("1SLA takes the trap corridor bait") {
  Rng rng(1);
  BudgetMeter meter(900);
  const std::vector<int> genes =
      one_step_lookahead_seed(make_initial_state("trapcorridor", 0), 6, meter, rng);
  CHECK(genes[0] == TrapCorridor::kLeft);
  // Once in the pit every further left still pays.
  for (int g : genes) CHECK(g == TrapCorridor::kLeft);
  CHECK(meter.used() == 18);
}

TEST_CASE("1SLA on a single-action chain") {
  Rng rng(2);
  BudgetMeter meter(900);
  const std::vector<int> genes =
      one_step_lookahead_seed(GameState(std::make_unique<Treadmill>()), 4, meter, rng);
  CHECK(genes == std::vector<int>{0, 0, 0, 0});
  CHECK(meter.used() == 4);
}

TEST_CASE("1SLA pads when the budget runs out mid-scan") {
  const GameState root(std::make_unique<Corridor>(11));
  for (int budget : {0, 1, 2, 4, 5, 7}) {
    Rng rng(budget);
    BudgetMeter meter(budget);
    const std::vector<int> genes = one_step_lookahead_seed(root, 6, meter, rng);
    CHECK(genes.size() == 6);
    CHECK(meter.used() == budget);
    // Every fully scanned step is greedy.
    for (int i = 0; i < budget / 3; ++i) CHECK(genes[i] == Corridor::kRight);
  }
}

TEST_CASE("1SLA cost equals the sum of scanned action counts") {
  for (const auto& name : game_names()) {
    for (int level = 0; level < kNumLevels; ++level) {
      const GameState root = make_initial_state(name, level);
      Rng rng(level), replay_rng(level);
      BudgetMeter meter(900);
      const std::vector<int> genes = one_step_lookahead_seed(root, 10, meter, rng);
      CHECK(genes.size() == 10);
      // Replay the greedy walk: each visited non-terminal state scans all
      // its actions once.
      GameState s = root;
      int expected = 0;
      for (int g : genes) {
        if (s.is_terminal()) break;
        expected += s.legal_actions();
        GameState best = s;
        int best_action = 0;
        double best_value = 0;
        for (int a = 0; a < s.legal_actions(); ++a) {
          GameState next = advance(s, ActionId{a}, replay_rng);
          const double v = heuristic_value(next).value;
          if (a == 0 || v > best_value) {
            best_value = v;
            best_action = a;
            best = next;
          }
        }
        CHECK(g == best_action);
        s = best;
      }
      CHECK(meter.used() == expected);
    }
  }
}

TEST_CASE("1SLA seed beats random plans on Corridor") {
  const GameState root(std::make_unique<Corridor>(11));
  Rng rng(3);
  BudgetMeter meter(900);
  const std::vector<int> seed = one_step_lookahead_seed(root, 6, meter, rng);
  BudgetMeter eval_meter(1 << 20);
  const double seed_fitness = evaluate_sequence(root, seed, eval_meter, rng).value;
  const Population random = init_random_population(1000, 6, 3, rng);
  double total = 0;
  for (const Individual& ind : random) {
    total += evaluate_sequence(root, ind.genes, eval_meter, rng).value;
  }
  CHECK(seed_fitness >= total / 1000);
  CHECK(seed_fitness == 6.0);
}

TEST_CASE("MCTS seed budget split") {
  const GameState root(std::make_unique<Corridor>(3));
  MctsParams params;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    BudgetMeter meter(900);
    int observed = -1;
    const TreeObserver observer = [&observed](const OLTree& t) {
      observed = t.root->visits;
    };
    const std::vector<int> genes = mcts_seed(root, 6, meter, params, 0.5, rng, &observer);
    CHECK(genes.size() == 6);
    CHECK(meter.used() <= 450);
    CHECK(meter.used() >= 445);
    CHECK(observed > 0);
  }

  // The allowance is taken against the limit but never exceeds what is left.
  BudgetMeter spent(900);
  REQUIRE(spent.try_consume(800));
  Rng rng(0);
  mcts_seed(GameState(std::make_unique<Corridor>(11)), 6, spent, params, 0.5, rng);
  CHECK(spent.used() == 900);
}

TEST_CASE("MCTS seed on Corridor starts with right") {
  const GameState root(std::make_unique<Corridor>(3));
  int rights = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    BudgetMeter meter(900);
    rights += mcts_seed(root, 6, meter, MctsParams{}, 0.5, rng)[0] == Corridor::kRight;
  }
  CHECK(rights >= 95);
}

TEST_CASE("MCTS seed below one iteration is fully random") {
  // Allowance floor(0.5 * 2) = 1 call: one truncated iteration, no action
  // reaches M = 3 visits, so the path is empty and every gene is padding.
  const GameState root(std::make_unique<Corridor>(11));
  int counts[3] = {};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed), mirror(seed);
    BudgetMeter meter(2);
    const std::vector<int> genes = mcts_seed(root, 6, meter, MctsParams{}, 0.5, rng);
    CHECK(meter.used() == 1);
    for (int g : genes) ++counts[g];
  }
  // 1800 genes over three values; 13.82 is the chi-square 0.001 cut at 2 df.
  double chi2 = 0;
  for (int c : counts) chi2 += (c - 600.0) * (c - 600.0) / 600.0;
  CHECK(chi2 < 13.82);
}

TEST_CASE("seed_population examples") {
  Rng rng(4);
  const std::vector<int> seed{1, 2, 0, 1};
  const Population one = seed_population(seed, 1, 3, rng);
  REQUIRE(one.size() == 1);
  CHECK(one[0].genes == seed);

  for (int trial = 0; trial < 50; ++trial) {
    const Population four = seed_population(seed, 4, 3, rng);
    REQUIRE(four.size() == 4);
    CHECK(four[0].genes == seed);
    for (const Individual& ind : four) CHECK_FALSE(ind.evaluated());
    for (int i = 1; i < 4; ++i) CHECK(hamming(four[i].genes, seed) == 1);
  }

  const std::vector<int> zeros{0, 0, 0};
  for (const Individual& ind : seed_population(zeros, 4, 1, rng)) {
    CHECK(ind.genes == zeros);
  }
  CHECK_THROWS_AS(seed_population({}, 4, 3, rng), ContractViolation);
}

TEST_CASE("seeders are length-total and charge what they spend") {
  for (auto kind : {SeedingStrategy::Kind::kOneStepLookAhead, SeedingStrategy::Kind::kMctsSeed}) {
    const Seeder seeder = make_seeder(SeedingStrategy{kind}, kDefaultUcbConstant);
    REQUIRE(seeder);
    for (const auto& name : game_names()) {
      for (int budget : {0, 1, 2, 3, 17, 900}) {
        for (int length : {1, 6, 20}) {
          Rng rng(budget * 31 + length);
          BudgetMeter meter(budget);
          const std::vector<int> genes =
              seeder(make_initial_state(name, 3), length, meter, rng);
          CHECK(genes.size() == static_cast<std::size_t>(length));
          CHECK(meter.used() <= budget);
          for (int g : genes) CHECK(g >= 0);
        }
      }
    }
  }
  CHECK_FALSE(make_seeder(SeedingStrategy{}, kDefaultUcbConstant));
}

TEST_CASE("seeded rhea_decide keeps the seed as member zero") {
  const GameState root(std::make_unique<Corridor>(11));
  const std::vector<int> fixed{1, 1, 2, 0, 1, 1};
  const Seeder seeder = [&fixed](const GameState&, int, BudgetMeter&, Rng&) {
    return fixed;
  };
  Rng rng(5);
  BudgetMeter meter(6);
  RheaTrace trace;
  rhea_decide(root, RheaParams{1, 6}, meter, &seeder, rng, &trace);
  CHECK(trace.final_population[0].genes == fixed);
}

}  // namespace
}  // namespace rhseed
