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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/agent.hpp"
#include "core/budget.hpp"
#include "core/experiment.hpp"
#include "core/game.hpp"
#include "core/olmcts.hpp"
#include "core/report.hpp"
#include "core/seeding.hpp"
#include "core/stats.hpp"

namespace rhseed {
namespace {

int failures = 0;

void verdict(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Tree audits from every search the suite runs.
std::atomic<long> audited_trees{0};
std::atomic<long> audited_nodes{0};
std::atomic<long> audit_violations{0};

const TreeObserver auditor = [](const OLTree& tree) {
  const TreeAudit a = audit_tree(tree);
  audited_trees.fetch_add(1);
  audited_nodes.fetch_add(a.nodes);
  audit_violations.fetch_add(a.violations);
};

std::vector<double> win_sample(const std::vector<RunRecord>& rs, const std::string& game,
                               const std::string& agent, PLConfig c) {
  std::vector<double> out;
  for (const RunRecord& r : rs) {
    if (r.game == game && r.agent == agent && r.population_size == c.population_size &&
        r.individual_length == c.individual_length) {
      out.push_back(r.win ? 1.0 : 0.0);
    }
  }
  return out;
}

// --- 1: full grid and budget audit --------------------------------------

std::vector<RunRecord> criterion_budget_audit(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<RunRecord> records;
  std::string error;
  try {
    records = run_experiment(config, {}, 0, &auditor);
  } catch (const BudgetAuditError& e) {
    error = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  long violations = 0;
  for (const RunRecord& r : records) violations += !budget_audit_ok(r, config.budget);
  const bool ok = error.empty() && records.size() == 12000 && violations == 0 && secs < 600;
  verdict(1, ok, "budget audit over the full default grid",
          error.empty() ? fmt("%.0f runs, %.0f over-budget runs, per-decision checks clean, %.1f s",
                              static_cast<double>(records.size()), violations, secs)
                        : "decision over budget: " + error);
  return records;
}

// --- 2, 3: directional win rates ------------------------------------------

void criterion_corridor(const std::vector<RunRecord>& rs) {
  const PLConfig c{1, 6};
  const auto greedy = win_sample(rs, "corridor", "1sla-seed", c);
  const auto vanilla = win_sample(rs, "corridor", "vanilla", c);
  const double g = 100 * mean(greedy), v = 100 * mean(vanilla);
  verdict(2, greedy.size() == 100 && vanilla.size() == 100 && g == 100.0 && v >= 90.0,
          "Corridor (1,6): 1SLA-seed wins 100%, vanilla >= 90%",
          fmt("1sla-seed %.2f%%, vanilla %.2f%% over %.0f runs each", g, v,
              static_cast<double>(greedy.size())));
}

void criterion_trap(const std::vector<RunRecord>& rs) {
  const PLConfig c{1, 6};
  const auto greedy = win_sample(rs, "trapcorridor", "1sla-seed", c);
  const auto mcts = win_sample(rs, "trapcorridor", "mcts-seed", c);
  const auto vanilla = win_sample(rs, "trapcorridor", "vanilla", c);
  const SignificanceCell m = mann_whitney_u(mcts, greedy);
  const SignificanceCell v = mann_whitney_u(vanilla, greedy);
  const bool ok = m.better == Better::kX && v.better == Better::kX;
  verdict(3, ok, "TrapCorridor (1,6): mcts-seed and vanilla beat 1SLA-seed on wins",
          fmt("win%% mcts-seed %.0f (p=%.2g), vanilla %.0f (p=%.2g)", 100 * mean(mcts),
              m.p_two_tailed, 100 * mean(vanilla), v.p_two_tailed) +
              fmt(", 1sla-seed %.0f", 100 * mean(greedy)));
}

// --- 4: bandit recommendation ---------------------------------------------

void criterion_bandit() {
  AgentConfig cfg;
  cfg.kind = AgentKind::kOlMcts;
  cfg.individual_length = 6;
  const Agent agent(cfg, &auditor);
  int good = 0;
  for (int i = 0; i < 100; ++i) {
    // Alternate levels so both arm positions are covered.
    const GameState root = make_initial_state("bandit", i % 2);
    const int good_arm = static_cast<const Bandit&>(root.game()).good_arm();
    Rng rng(mix64(0xba4d17 + i));
    BudgetMeter meter(kDefaultBudget);
    good += agent.decide(root, meter, rng).index == good_arm;
  }
  verdict(4, good >= 90, "Bandit: olmcts recommends the 0.7 arm in >= 90/100 decisions",
          fmt("%.0f/100", good));
}

// --- 5: seeding decay -----------------------------------------------------

void criterion_decay(const std::vector<RunRecord>& rs) {
  const Report report = summarize(rs);
  // A (game, seeded agent) pair counts when it is significantly better than
  // vanilla on win rate or on score.
  auto count_at = [&](PLConfig c, std::string& listing) {
    int wins_only = 0, scores_only = 0, either = 0;
    for (const auto& per : report.per_config) {
      if (per.config != c) continue;
      for (const char* seeded : {"1sla-seed", "mcts-seed"}) {
        const BetterCount* bc = find_count(per, seeded, "vanilla");
        if (bc == nullptr) continue;
        std::set<std::string> games(bc->win_games.begin(), bc->win_games.end());
        games.insert(bc->score_games.begin(), bc->score_games.end());
        wins_only += bc->wins;
        scores_only += bc->scores;
        either += static_cast<int>(games.size());
        for (const auto& g : games) listing += std::string(" ") + seeded + "/" + g;
      }
    }
    return std::array<int, 3>{either, wins_only, scores_only};
  };
  std::string small_list, large_list;
  const auto small = count_at({1, 6}, small_list);
  const auto large = count_at({20, 20}, large_list);
  verdict(5, small[0] >= large[0],
          "seeding impact at (1,6) >= at (20,20) (pairs better than vanilla)",
          fmt("(1,6): %.0f [wins %.0f, scores %.0f];", small[0], small[1], small[2]) +
              small_list +
              fmt(" | (20,20): %.0f [wins %.0f, scores %.0f];", large[0], large[1], large[2]) +
              large_list);
}

// --- 6: Mann-Whitney against permutation enumeration ------------------------

double pair_u(const std::vector<double>& xs, const std::vector<double>& ys) {
  double u = 0;
  for (double x : xs) {
    for (double y : ys) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
  }
  return u;
}

double permutation_p(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<double> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  const int n = static_cast<int>(all.size());
  const int k = static_cast<int>(xs.size());
  const double centre = k * static_cast<double>(ys.size()) / 2.0;
  const double observed = std::abs(pair_u(xs, ys) - centre);
  long extreme = 0, total = 0;
  std::vector<double> a, b;
  // Gosper's hack: every n-bit mask with k bits set.
  for (unsigned mask = (1u << k) - 1; mask < (1u << n);) {
    a.clear();
    b.clear();
    for (int i = 0; i < n; ++i) ((mask >> i) & 1u ? a : b).push_back(all[i]);
    ++total;
    if (std::abs(pair_u(a, b) - centre) >= observed - 1e-9) ++extreme;
    const unsigned c = mask & -mask;
    const unsigned r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return static_cast<double>(extreme) / static_cast<double>(total);
}

void criterion_mann_whitney() {
  Rng rng(6);
  double worst = 0, worst_normal = 0;
  long fixtures = 0;
  bool sums_ok = true;
  for (int nx = 1; nx <= 8; ++nx) {
    for (int ny = 1; ny <= 8; ++ny) {
      std::vector<std::vector<double>> family_x, family_y;
      // Structured fixtures: all tied, separated, interleaved.
      family_x.push_back(std::vector<double>(nx, 1.0));
      family_y.push_back(std::vector<double>(ny, 1.0));
      std::vector<double> sx(nx), sy(ny), ix(nx), iy(ny);
      for (int i = 0; i < nx; ++i) sx[i] = i, ix[i] = 2 * i;
      for (int i = 0; i < ny; ++i) sy[i] = nx + i, iy[i] = 2 * i + 1;
      family_x.push_back(sx), family_y.push_back(sy);
      family_x.push_back(ix), family_y.push_back(iy);
      // Random fixtures over alphabets from binary (heavy ties) to distinct.
      for (int alphabet : {2, 3, 4, 1000}) {
        for (int t = 0; t < 6; ++t) {
          std::vector<double> x(nx), y(ny);
          for (double& v : x) v = rng.uniform_int(alphabet);
          for (double& v : y) v = rng.uniform_int(alphabet);
          family_x.push_back(x), family_y.push_back(y);
        }
      }
      for (std::size_t f = 0; f < family_x.size(); ++f) {
        const auto& x = family_x[f];
        const auto& y = family_y[f];
        const SignificanceCell cell = mann_whitney_u(x, y);
        const double oracle = permutation_p(x, y);
        worst = std::max(worst, std::abs(cell.p_two_tailed - oracle));
        worst_normal = std::max(worst_normal, std::abs(mann_whitney_normal_p(x, y) - oracle));
        sums_ok = sums_ok && cell.u_xy + cell.u_yx == nx * ny && cell.u_xy == pair_u(x, y);
        ++fixtures;
      }
    }
  }
  verdict(6, worst <= 0.02 && sums_ok,
          "Mann-Whitney p within 0.02 of permutation enumeration, U sums exact",
          fmt("%.0f fixtures (n <= 8, with ties); max |p - p_exact| = %.2g; "
              "U_xy + U_yx = nx*ny on all: ",
              fixtures, worst) +
              (sums_ok ? "yes" : "no") +
              fmt("; normal approximation alone would be off by up to %.3f", worst_normal));
}

// --- 7: tree audit --------------------------------------------------------

void criterion_tree_audit() {
  const long nodes = audited_nodes.load();
  const long bad = audit_violations.load();
  verdict(7, nodes >= 1000 && bad == 0, "visit conservation on every MCTS tree node",
          fmt("%.0f trees, %.0f nodes audited, %.0f violations",
              static_cast<double>(audited_trees.load()), static_cast<double>(nodes),
              static_cast<double>(bad)));
}

// --- 8: reported cell convention ------------------------------------------

void criterion_table_cell() {
  const auto [rate, se] = win_rate_with_se(87, 100);
  const std::string cell = format_with_se(rate, se);
  // More cells under the same convention.
  const std::vector<std::pair<int, std::string>> more{
      {98, "98.00 (1.40)"}, {90, "90.00 (3.00)"}, {84, "84.00 (3.67)"}, {100, "100.00 (0.00)"}};
  bool others = true;
  for (const auto& [wins, want] : more) {
    const auto [r, s] = win_rate_with_se(wins, 100);
    others = others && format_with_se(r, s) == want;
  }
  verdict(8, cell == "87.00 (3.36)" && others, "87 wins / 100 runs formats as 87.00 (3.36)",
          "got \"" + cell + "\"" + (others ? ", other cells match" : ", other cells differ"));
}

// --- 9: determinism -------------------------------------------------------

void criterion_determinism(const ExperimentConfig& config, const std::vector<RunRecord>& rs) {
  const std::vector<RunKey> keys = enumerate_runs(config);
  int checked = 0, mismatched = 0, stochastic = 0;
  for (std::size_t i = 0; i < keys.size(); i += 37) {
    const RunRecord again = run_single(config, keys[i]);
    ++checked;
    mismatched += !(again == rs[i]);
    stochastic += GameSpec::parse(keys[i].game + ":0").stochastic;
  }
  verdict(9, mismatched == 0, "rerunning run IDs reproduces their records bit-for-bit",
          fmt("%.0f reruns (%.0f on stochastic games), %.0f mismatches", checked, stochastic,
              mismatched));
}

// --- 10: seeded population structure --------------------------------------

void criterion_seed_population() {
  const std::vector<SeedingStrategy::Kind> kinds{SeedingStrategy::Kind::kOneStepLookAhead,
                                                 SeedingStrategy::Kind::kMctsSeed};
  Rng rng(10);
  int bad = 0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const std::string& name = game_names()[i % game_names().size()];
    const GameState root = make_initial_state(name, (i / 5) % kNumLevels);
    const int length = 1 + rng.uniform_int(20);
    // Small budgets keep the MCTS seeder quick; the structure is the same.
    const Seeder seeder = make_seeder(SeedingStrategy{kinds[i % 2]}, kDefaultUcbConstant);
    BudgetMeter meter(60);
    const std::vector<int> seed = seeder(root, length, meter, rng);
    const Population pop = seed_population(seed, 5, root.legal_actions(), rng);
    bool ok = pop.size() == 5 && pop[0].genes == seed;
    for (int m = 1; m < 5 && ok; ++m) {
      int d = 0;
      for (int g = 0; g < length; ++g) d += pop[m].genes[g] != seed[g];
      ok = d == 1;
    }
    bad += !ok;
  }
  verdict(10, bad == 0, "P=5 seeded populations: member 0 is the seed, others at distance 1",
          fmt("%.0f seedings, %.0f malformed", samples, bad));
}

}  // namespace
}  // namespace rhseed

int main() {
  using namespace rhseed;
  try {
    ExperimentConfig grid;  // defaults: 5 games, 4 agents, 6 configs, 20 x 5 levels
    grid.master_seed = 0;
    const std::vector<RunRecord> records = criterion_budget_audit(grid);
    if (records.size() == grid.run_count()) {
      criterion_corridor(records);
      criterion_trap(records);
    } else {
      verdict(2, false, "Corridor (1,6)", "grid did not complete");
      verdict(3, false, "TrapCorridor (1,6)", "grid did not complete");
    }
    criterion_bandit();
    if (records.size() == grid.run_count()) {
      criterion_decay(records);
    } else {
      verdict(5, false, "seeding decay", "grid did not complete");
    }
    criterion_mann_whitney();
    criterion_tree_audit();
    criterion_table_cell();
    if (records.size() == grid.run_count()) {
      criterion_determinism(grid, records);
    } else {
      verdict(9, false, "determinism", "grid did not complete");
    }
    criterion_seed_population();
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance suite aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
