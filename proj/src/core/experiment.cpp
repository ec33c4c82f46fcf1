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

#include "core/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

#include "core/budget.hpp"
#include "core/rng.hpp"

namespace rhseed {

const std::vector<PLConfig>& default_configs() {
  static const std::vector<PLConfig> configs = {
      {1, 6}, {2, 8}, {5, 10}, {10, 14}, {15, 16}, {20, 20}};
  return configs;
}

void ExperimentConfig::validate() const {
  if (games.empty()) throw std::invalid_argument("no games given");
  if (agents.empty()) throw std::invalid_argument("no agents given");
  if (configs.empty()) throw std::invalid_argument("no (P,L) configs given");
  if (levels.empty()) throw std::invalid_argument("no levels given");
  for (const auto& g : games) {
    if (!is_known_game(g)) throw std::invalid_argument("unknown game '" + g + "'");
  }
  for (const auto& a : agents) {
    if (!parse_agent(a)) throw std::invalid_argument("unknown agent '" + a + "'");
  }
  for (int level : levels) {
    if (level < 0 || level >= kNumLevels) {
      throw std::invalid_argument("level out of range: " + std::to_string(level));
    }
  }
  for (const auto& c : configs) {
    if (c.population_size < 1 || c.individual_length < 1) {
      throw std::invalid_argument("P and L must be positive");
    }
  }
  if (repeats_per_level < 1) throw std::invalid_argument("repeats must be >= 1");
  if (budget < 0) throw std::invalid_argument("budget must be >= 0");
}

std::size_t ExperimentConfig::run_count() const {
  return agents.size() * games.size() * configs.size() * levels.size() *
         static_cast<std::size_t>(repeats_per_level);
}

namespace {

std::uint64_t hash_string(std::string_view s) {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view game,
                              int level, std::string_view agent,
                              PLConfig config, int repeat_index) {
  std::uint64_t h = mix64(master_seed);
  for (std::uint64_t part :
       {hash_string(game), static_cast<std::uint64_t>(level), hash_string(agent),
        static_cast<std::uint64_t>(config.population_size),
        static_cast<std::uint64_t>(config.individual_length),
        static_cast<std::uint64_t>(repeat_index)}) {
    h = mix64(h ^ part);
  }
  return h;
}

RunRecord play_game(const GameSpec& spec, const AgentConfig& agent_config,
                    int budget, std::uint64_t run_seed,
                    const TreeObserver* observer) {
  const Agent agent(agent_config, observer);
  GameState state = make_initial_state(spec);
  Rng agent_rng(mix64(run_seed));
  Rng game_rng(mix64(run_seed ^ 0x5bd1e995ULL));
  long long fm_calls = 0;
  while (!state.is_terminal()) {
    BudgetMeter meter(budget);
    const ActionId action = agent.decide(state, meter, agent_rng);
    if (meter.used() > budget) {
      throw BudgetAuditError("decision at tick " + std::to_string(state.tick()) +
                             " used " + std::to_string(meter.used()) +
                             " FM calls, budget " + std::to_string(budget));
    }
    fm_calls += meter.used();
    state.advance_in_place(action, game_rng);
  }
  RunRecord record;
  record.game = spec.name;
  record.level = spec.level;
  record.agent = std::string(agent_name(agent_config.kind));
  record.population_size = agent_config.population_size;
  record.individual_length = agent_config.individual_length;
  record.win = state.outcome() == Outcome::kWin;
  record.final_score = state.score();
  record.ticks = state.tick();
  record.fm_calls_total = fm_calls;
  record.run_seed = run_seed;
  return record;
}

std::vector<RunKey> enumerate_runs(const ExperimentConfig& config) {
  std::vector<RunKey> keys;
  keys.reserve(config.run_count());
  for (const auto& agent : config.agents) {
    for (const auto& game : config.games) {
      for (const auto& pl : config.configs) {
        for (int level : config.levels) {
          for (int r = 0; r < config.repeats_per_level; ++r) {
            keys.push_back({game, level, agent, pl, r});
          }
        }
      }
    }
  }
  return keys;
}

RunRecord run_single(const ExperimentConfig& config, const RunKey& key,
                     const TreeObserver* observer) {
  AgentConfig agent;
  agent.kind = *parse_agent(key.agent);
  agent.population_size = key.config.population_size;
  agent.individual_length = key.config.individual_length;
  GameSpec spec = GameSpec::parse(key.game + ":" + std::to_string(key.level));
  const std::uint64_t seed = derive_run_seed(config.master_seed, key.game,
                                             key.level, key.agent, key.config,
                                             key.repeat);
  RunRecord record = play_game(spec, agent, config.budget, seed, observer);
  if (!budget_audit_ok(record, config.budget)) {
    throw BudgetAuditError("run " + key.game + ":" + std::to_string(key.level) +
                           " " + key.agent + " exceeded ticks * budget");
  }
  return record;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config,
                                      const RecordSink& sink, int threads,
                                      const TreeObserver* observer) {
  config.validate();
  const std::vector<RunKey> keys = enumerate_runs(config);
  std::vector<RunRecord> records(keys.size());

  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(keys.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= keys.size()) return;
      try {
        records[i] = run_single(config, keys[i], observer);
        if (sink) {
          std::lock_guard<std::mutex> lock(mu);
          sink(records[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return records;
}

bool budget_audit_ok(const RunRecord& record, int budget) {
  return record.fm_calls_total <= static_cast<long long>(record.ticks) * budget;
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) parts.emplace_back(item);
    start = end + 1;
  }
  return parts;
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad " + std::string(what) + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<PLConfig> parse_configs(std::string_view text) {
  std::vector<PLConfig> configs;
  for (const auto& item : split_list(text)) {
    const auto x = item.find('x');
    if (x == std::string::npos) {
      throw std::invalid_argument("config must look like PxL, got '" + item + "'");
    }
    PLConfig c{parse_int(std::string_view(item).substr(0, x), "P"),
               parse_int(std::string_view(item).substr(x + 1), "L")};
    if (c.population_size < 1 || c.individual_length < 1) {
      throw std::invalid_argument("P and L must be positive in '" + item + "'");
    }
    configs.push_back(c);
  }
  if (configs.empty()) throw std::invalid_argument("empty config list");
  return configs;
}

std::vector<int> parse_levels(std::string_view text) {
  std::vector<int> levels;
  const auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    const int lo = parse_int(text.substr(0, dots), "level");
    const int hi = parse_int(text.substr(dots + 2), "level");
    if (lo > hi) throw std::invalid_argument("empty level range");
    for (int l = lo; l <= hi; ++l) levels.push_back(l);
  } else {
    for (const auto& item : split_list(text)) levels.push_back(parse_int(item, "level"));
  }
  if (levels.empty()) throw std::invalid_argument("empty level list");
  return levels;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string to_csv_row(const RunRecord& r) {
  std::string row;
  row += r.game;
  row += ',' + std::to_string(r.level);
  row += ',' + r.agent;
  row += ',' + std::to_string(r.population_size);
  row += ',' + std::to_string(r.individual_length);
  row += r.win ? ",1" : ",0";
  row += ',' + format_double(r.final_score);
  row += ',' + std::to_string(r.ticks);
  row += ',' + std::to_string(r.fm_calls_total);
  row += ',' + std::to_string(r.run_seed);
  return row;
}

RunRecord parse_csv_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> f;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(',', start);
    f.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                 : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (f.size() != 10) {
    throw std::invalid_argument("expected 10 CSV fields, got " +
                                std::to_string(f.size()));
  }
  RunRecord r;
  r.game = std::string(f[0]);
  r.level = parse_int(f[1], "level");
  r.agent = std::string(f[2]);
  r.population_size = parse_int(f[3], "P");
  r.individual_length = parse_int(f[4], "L");
  r.win = parse_int(f[5], "win") != 0;
  auto [p1, e1] = std::from_chars(f[6].data(), f[6].data() + f[6].size(), r.final_score);
  if (e1 != std::errc()) throw std::invalid_argument("bad score");
  r.ticks = parse_int(f[7], "ticks");
  auto [p2, e2] = std::from_chars(f[8].data(), f[8].data() + f[8].size(), r.fm_calls_total);
  if (e2 != std::errc()) throw std::invalid_argument("bad fm_calls");
  auto [p3, e3] = std::from_chars(f[9].data(), f[9].data() + f[9].size(), r.run_seed);
  if (e3 != std::errc()) throw std::invalid_argument("bad seed");
  return r;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRunsCsvHeader << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

std::vector<RunRecord> read_runs_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  if (!std::getline(in, line)) return records;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRunsCsvHeader) {
    throw std::invalid_argument("unexpected CSV header: '" + line + "'");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(parse_csv_row(line));
  }
  return records;
}

}  // namespace rhseed
