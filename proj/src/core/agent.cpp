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

#include "core/agent.hpp"

#include "core/check.hpp"

namespace rhseed {

std::string_view agent_name(AgentKind kind) {
  switch (kind) {
    case AgentKind::kVanilla:
      return "vanilla";
    case AgentKind::kOneStepSeed:
      return "1sla-seed";
    case AgentKind::kMctsSeed:
      return "mcts-seed";
    case AgentKind::kOlMcts:
      return "olmcts";
  }
  return "unknown";
}

const std::vector<AgentKind>& all_agents() {
  static const std::vector<AgentKind> kinds = {
      AgentKind::kVanilla, AgentKind::kOneStepSeed, AgentKind::kMctsSeed,
      AgentKind::kOlMcts};
  return kinds;
}

std::optional<AgentKind> parse_agent(std::string_view name) {
  for (AgentKind kind : all_agents()) {
    if (agent_name(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

SeedingStrategy strategy_for(const AgentConfig& config) {
  SeedingStrategy s;
  s.fraction = config.seed_fraction;
  s.min_visits = config.min_visits;
  switch (config.kind) {
    case AgentKind::kOneStepSeed:
      s.kind = SeedingStrategy::Kind::kOneStepLookAhead;
      break;
    case AgentKind::kMctsSeed:
      s.kind = SeedingStrategy::Kind::kMctsSeed;
      break;
    default:
      s.kind = SeedingStrategy::Kind::kNone;
      break;
  }
  return s;
}

}  // namespace

Agent::Agent(AgentConfig config, const TreeObserver* observer)
    : config_(config),
      observer_(observer),
      seeder_(make_seeder(strategy_for(config), config.exploration, observer)) {
  RHSEED_CHECK(config.population_size >= 1, "P must be >= 1");
  RHSEED_CHECK(config.individual_length >= 1, "L must be >= 1");
}

ActionId Agent::decide(const GameState& state, BudgetMeter& meter,
                       Rng& rng) const {
  if (config_.kind == AgentKind::kOlMcts) {
    MctsParams params;
    params.exploration = config_.exploration;
    params.rollout_depth = config_.individual_length;
    params.min_visits_relevant = config_.min_visits;
    const OLTree tree = mcts_search(state, params, meter, rng);
    if (observer_ != nullptr && *observer_) (*observer_)(tree);
    return recommend(tree).action;
  }
  RheaParams params;
  params.population_size = config_.population_size;
  params.individual_length = config_.individual_length;
  return rhea_decide(state, params, meter, seeder_ ? &seeder_ : nullptr, rng);
}

}  // namespace rhseed
