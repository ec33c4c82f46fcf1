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

#include "core/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "core/agent.hpp"
#include "core/check.hpp"

namespace rhseed {

namespace {

int agent_order(const std::string& name) {
  const auto kind = parse_agent(name);
  return kind ? static_cast<int>(*kind) : 1000;
}

bool agent_less(const std::string& a, const std::string& b) {
  return std::make_tuple(agent_order(a), a) < std::make_tuple(agent_order(b), b);
}

struct Samples {
  std::vector<double> wins;
  std::vector<double> scores;
};

using GroupKey = std::tuple<std::string, PLConfig>;

std::string config_label(PLConfig c) {
  return std::to_string(c.population_size) + "-" + std::to_string(c.individual_length);
}

void add_unique(std::vector<std::string>& games, const std::string& game) {
  if (std::find(games.begin(), games.end(), game) == games.end()) {
    games.push_back(game);
  }
}

}  // namespace

std::pair<double, double> win_rate_with_se(int wins, int runs) {
  if (runs <= 0) return {0.0, 0.0};
  const double p = static_cast<double>(wins) / runs;
  return {100.0 * p, 100.0 * std::sqrt(p * (1.0 - p) / runs)};
}

std::string format_with_se(double value, double se) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f (%.2f)", value, se);
  return buf;
}

const BetterCount* find_count(const ConfigBetterCounts& counts,
                              const std::string& agent,
                              const std::string& versus) {
  for (const auto& c : counts.counts) {
    if (c.agent == agent && c.versus == versus) return &c;
  }
  return nullptr;
}

Report summarize(const std::vector<RunRecord>& records) {
  RHSEED_CHECK(!records.empty(), "summarize needs at least one record");
  Report report;

  std::map<GroupKey, std::map<std::string, Samples>> groups;
  std::set<std::string> agent_set;
  std::set<std::string> game_set;
  std::set<PLConfig> config_set;
  for (const auto& r : records) {
    const PLConfig c{r.population_size, r.individual_length};
    auto& s = groups[{r.game, c}][r.agent];
    s.wins.push_back(r.win ? 1.0 : 0.0);
    s.scores.push_back(r.final_score);
    agent_set.insert(r.agent);
    game_set.insert(r.game);
    config_set.insert(c);
  }
  report.agents.assign(agent_set.begin(), agent_set.end());
  std::sort(report.agents.begin(), report.agents.end(), agent_less);
  report.games.assign(game_set.begin(), game_set.end());
  report.configs.assign(config_set.begin(), config_set.end());

  // Sorting the samples makes every floating-point sum independent of the
  // input order.
  for (auto& [key, by_agent] : groups) {
    for (auto& [agent, s] : by_agent) {
      std::sort(s.wins.begin(), s.wins.end());
      std::sort(s.scores.begin(), s.scores.end());
    }
  }

  for (const auto& [key, by_agent] : groups) {
    const auto& [game, config] = key;
    for (const auto& agent : report.agents) {
      auto it = by_agent.find(agent);
      if (it == by_agent.end()) continue;
      const Samples& s = it->second;
      AgentSummary sum;
      sum.game = game;
      sum.config = config;
      sum.agent = agent;
      sum.runs = static_cast<int>(s.wins.size());
      sum.wins = static_cast<int>(std::count(s.wins.begin(), s.wins.end(), 1.0));
      std::tie(sum.win_rate, sum.win_rate_se) = win_rate_with_se(sum.wins, sum.runs);
      sum.mean_score = mean(s.scores);
      sum.score_se = standard_error(s.scores);
      report.summaries.push_back(sum);
    }
  }

  // Pairwise tests, plus "X beats Y" lookups for the count tables.
  std::map<std::tuple<std::string, PLConfig, std::string, std::string>,
           std::pair<bool, bool>>
      beats;
  for (const auto& [key, by_agent] : groups) {
    const auto& [game, config] = key;
    for (std::size_t i = 0; i < report.agents.size(); ++i) {
      for (std::size_t j = i + 1; j < report.agents.size(); ++j) {
        const auto& ax = report.agents[i];
        const auto& ay = report.agents[j];
        auto ix = by_agent.find(ax);
        auto iy = by_agent.find(ay);
        if (ix == by_agent.end() || iy == by_agent.end()) continue;
        PairwiseComparison cmp;
        cmp.game = game;
        cmp.config = config;
        cmp.agent_x = ax;
        cmp.agent_y = ay;
        cmp.wins = mann_whitney_u(ix->second.wins, iy->second.wins);
        cmp.scores = mann_whitney_u(ix->second.scores, iy->second.scores);
        auto name_of = [&](Better b) -> std::string {
          return b == Better::kX ? ax : b == Better::kY ? ay : "";
        };
        cmp.better_wins = name_of(cmp.wins.better);
        cmp.better_scores = name_of(cmp.scores.better);
        beats[{game, config, ax, ay}] = {cmp.wins.better == Better::kX,
                                        cmp.scores.better == Better::kX};
        beats[{game, config, ay, ax}] = {cmp.wins.better == Better::kY,
                                        cmp.scores.better == Better::kY};
        report.pairwise.push_back(std::move(cmp));
      }
    }
  }

  std::map<std::pair<std::string, std::string>, BetterCount> unions;
  for (const PLConfig& config : report.configs) {
    ConfigBetterCounts per;
    per.config = config;
    for (const auto& x : report.agents) {
      // Pairwise rows, then the "better than all others" row.
      std::vector<std::string> versus_list;
      for (const auto& y : report.agents) {
        if (y != x) versus_list.push_back(y);
      }
      versus_list.push_back("");
      for (const auto& versus : versus_list) {
        if (versus.empty() && report.agents.size() < 2) continue;
        BetterCount count;
        count.agent = x;
        count.versus = versus;
        BetterCount& u = unions[{x, versus}];
        u.agent = x;
        u.versus = versus;
        for (const auto& game : report.games) {
          bool any = false;
          bool all_wins = true;
          bool all_scores = true;
          for (const auto& y : report.agents) {
            if (y == x || (!versus.empty() && y != versus)) continue;
            auto it = beats.find({game, config, x, y});
            if (it == beats.end()) {
              all_wins = all_scores = false;
              continue;
            }
            any = true;
            all_wins = all_wins && it->second.first;
            all_scores = all_scores && it->second.second;
          }
          if (!any) continue;
          if (all_wins) {
            ++count.wins;
            count.win_games.push_back(game);
            add_unique(u.win_games, game);
          }
          if (all_scores) {
            ++count.scores;
            count.score_games.push_back(game);
            add_unique(u.score_games, game);
          }
        }
        per.counts.push_back(std::move(count));
      }
    }
    report.per_config.push_back(std::move(per));
  }
  for (auto& [key, u] : unions) {
    std::sort(u.win_games.begin(), u.win_games.end());
    std::sort(u.score_games.begin(), u.score_games.end());
    u.wins = static_cast<int>(u.win_games.size());
    u.scores = static_cast<int>(u.score_games.size());
    report.unions.push_back(u);
  }
  std::sort(report.unions.begin(), report.unions.end(),
            [](const BetterCount& a, const BetterCount& b) {
              if (a.agent != b.agent) return agent_less(a.agent, b.agent);
              if (a.versus.empty() != b.versus.empty()) return b.versus.empty();
              return agent_less(a.versus, b.versus);
            });
  return report;
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  out << "Win rate and mean score per game and (P-L), standard errors in "
         "parentheses\n\n";
  for (const auto& s : report.summaries) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-16s %-6s %-10s runs=%-4d win%%=%-16s score=%s\n",
                  s.game.c_str(), config_label(s.config).c_str(),
                  s.agent.c_str(), s.runs,
                  format_with_se(s.win_rate, s.win_rate_se).c_str(),
                  format_with_se(s.mean_score, s.score_se).c_str());
    out << line;
  }
  if (report.agents.size() < 2) {
    out << "\nSingle agent: no pairwise comparisons.\n";
    return out.str();
  }

  out << "\nGames where the row agent is significantly better "
         "(Mann-Whitney, two-tailed, p < 0.05): wins (scores)\n\n";
  char cell[64];
  std::snprintf(cell, sizeof(cell), "%-24s", "agent > versus");
  out << cell;
  for (const auto& c : report.configs) {
    std::snprintf(cell, sizeof(cell), "%-10s", config_label(c).c_str());
    out << cell;
  }
  out << "unique\n";
  for (const auto& u : report.unions) {
    const std::string label = u.agent + " > " + (u.versus.empty() ? "all" : u.versus);
    std::snprintf(cell, sizeof(cell), "%-24s", label.c_str());
    out << cell;
    for (const auto& per : report.per_config) {
      const BetterCount* c = find_count(per, u.agent, u.versus);
      std::string v = c ? std::to_string(c->wins) + " (" + std::to_string(c->scores) + ")" : "-";
      std::snprintf(cell, sizeof(cell), "%-10s", v.c_str());
      out << cell;
    }
    out << u.wins << " (" << u.scores << ")\n";
  }
  return out.str();
}

namespace {

nlohmann::json cell_json(const SignificanceCell& c, const std::string& better) {
  nlohmann::json j;
  j["u_xy"] = c.u_xy;
  j["u_yx"] = c.u_yx;
  j["p"] = c.p_two_tailed;
  j["exact"] = c.exact;
  j["better"] = better.empty() ? nlohmann::json(nullptr) : nlohmann::json(better);
  return j;
}

nlohmann::json count_json(const BetterCount& c) {
  return {{"agent", c.agent},
          {"versus", c.versus.empty() ? nlohmann::json("all") : nlohmann::json(c.versus)},
          {"wins", c.wins},
          {"scores", c.scores},
          {"win_games", c.win_games},
          {"score_games", c.score_games}};
}

}  // namespace

std::string report_to_json(const Report& report) {
  nlohmann::json doc;
  doc["agents"] = report.agents;
  doc["games"] = report.games;
  for (const auto& c : report.configs) {
    doc["configs"].push_back({{"P", c.population_size}, {"L", c.individual_length}});
  }
  doc["summaries"] = nlohmann::json::array();
  for (const auto& s : report.summaries) {
    doc["summaries"].push_back({{"game", s.game},
                                {"P", s.config.population_size},
                                {"L", s.config.individual_length},
                                {"agent", s.agent},
                                {"runs", s.runs},
                                {"wins", s.wins},
                                {"win_rate", s.win_rate},
                                {"win_rate_se", s.win_rate_se},
                                {"mean_score", s.mean_score},
                                {"score_se", s.score_se}});
  }
  doc["pairwise"] = nlohmann::json::array();
  for (const auto& p : report.pairwise) {
    doc["pairwise"].push_back({{"game", p.game},
                               {"P", p.config.population_size},
                               {"L", p.config.individual_length},
                               {"x", p.agent_x},
                               {"y", p.agent_y},
                               {"wins", cell_json(p.wins, p.better_wins)},
                               {"scores", cell_json(p.scores, p.better_scores)}});
  }
  doc["per_config"] = nlohmann::json::array();
  for (const auto& per : report.per_config) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : per.counts) counts.push_back(count_json(c));
    doc["per_config"].push_back({{"P", per.config.population_size},
                                 {"L", per.config.individual_length},
                                 {"counts", counts}});
  }
  doc["unique_across_configs"] = nlohmann::json::array();
  for (const auto& u : report.unions) doc["unique_across_configs"].push_back(count_json(u));
  return doc.dump(2);
}

void write_summary_csv(std::ostream& out, const Report& report) {
  out << "game,P,L,agent,runs,wins,win_rate,win_rate_se,mean_score,score_se\n";
  char buf[256];
  for (const auto& s : report.summaries) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%s,%d,%d,%.2f,%.2f,%.4f,%.4f\n",
                  s.game.c_str(), s.config.population_size,
                  s.config.individual_length, s.agent.c_str(), s.runs, s.wins,
                  s.win_rate, s.win_rate_se, s.mean_score, s.score_se);
    out << buf;
  }
}

}  // namespace rhseed
