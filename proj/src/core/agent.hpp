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

#ifndef RHSEED_CORE_AGENT_HPP_
#define RHSEED_CORE_AGENT_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "core/budget.hpp"
#include "core/game.hpp"
#include "core/olmcts.hpp"
#include "core/rhea.hpp"
#include "core/rng.hpp"
#include "core/seeding.hpp"

namespace rhseed {

enum class AgentKind { kVanilla, kOneStepSeed, kMctsSeed, kOlMcts };

// CLI names: "vanilla", "1sla-seed", "mcts-seed", "olmcts".
std::string_view agent_name(AgentKind kind);
std::optional<AgentKind> parse_agent(std::string_view name);
const std::vector<AgentKind>& all_agents();

struct AgentConfig {
  AgentKind kind = AgentKind::kVanilla;
  int population_size = 1;    // P; ignored by olmcts
  int individual_length = 6;  // L; rollout depth for olmcts and mcts-seed
  double exploration = kDefaultUcbConstant;
  double seed_fraction = 0.5;
  int min_visits = 3;
};

// A decision-maker for one game tick. Stateless between decisions.
class Agent {
 public:
  // `observer`, if given, sees every completed MCTS tree and must outlive the
  // agent.
  explicit Agent(AgentConfig config, const TreeObserver* observer = nullptr);

  ActionId decide(const GameState& state, BudgetMeter& meter, Rng& rng) const;

  const AgentConfig& config() const { return config_; }

 private:
  AgentConfig config_;
  const TreeObserver* observer_;
  Seeder seeder_;
};

}  // namespace rhseed

#endif  // RHSEED_CORE_AGENT_HPP_
