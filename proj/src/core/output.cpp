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

#include "core/output.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "core/report.hpp"

namespace rhseed {

namespace fs = std::filesystem;

std::string experiment_to_json(const ExperimentConfig& config) {
  nlohmann::json j;
  j["games"] = config.games;
  j["levels"] = config.levels;
  j["repeats_per_level"] = config.repeats_per_level;
  j["agents"] = config.agents;
  j["budget"] = config.budget;
  j["master_seed"] = config.master_seed;
  j["configs"] = nlohmann::json::array();
  for (const auto& c : config.configs) {
    j["configs"].push_back({{"P", c.population_size}, {"L", c.individual_length}});
  }
  return j.dump(2);
}

ExperimentConfig experiment_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ExperimentConfig config;
  config.games = j.at("games").get<std::vector<std::string>>();
  config.levels = j.at("levels").get<std::vector<int>>();
  config.repeats_per_level = j.at("repeats_per_level").get<int>();
  config.agents = j.at("agents").get<std::vector<std::string>>();
  config.budget = j.at("budget").get<int>();
  config.master_seed = j.at("master_seed").get<std::uint64_t>();
  config.configs.clear();
  for (const auto& c : j.at("configs")) {
    config.configs.push_back({c.at("P").get<int>(), c.at("L").get<int>()});
  }
  return config;
}

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  return out;
}

}  // namespace

std::size_t run_experiment_to_dir(const ExperimentConfig& config,
                                  const fs::path& dir, int threads,
                                  const ProgressFn& progress) {
  config.validate();
  fs::create_directories(dir);
  open_out(dir / kExperimentFile) << experiment_to_json(config) << '\n';

  std::ofstream csv = open_out(dir / kRunsFile);
  csv << kRunsCsvHeader << '\n';
  const std::size_t total = config.run_count();
  std::size_t done = 0;
  auto sink = [&](const RunRecord& r) {
    csv << to_csv_row(r) << '\n';
    ++done;
    if (progress) progress(done, total);
  };
  const auto records = run_experiment(config, sink, threads);
  csv.close();
  report_dir(dir, dir);
  return records.size();
}

DirReport report_dir(const fs::path& in_dir, const fs::path& out_dir) {
  std::ifstream in(in_dir / kRunsFile);
  if (!in) throw std::ios_base::failure("cannot read " + (in_dir / kRunsFile).string());
  const std::vector<RunRecord> records = read_runs_csv(in);
  if (records.empty()) throw std::invalid_argument("no records in runs.csv");

  DirReport result;
  result.records = records.size();
  std::ifstream exp(in_dir / kExperimentFile);
  if (exp) {
    std::stringstream ss;
    ss << exp.rdbuf();
    result.budget = experiment_from_json(ss.str()).budget;
    for (const auto& r : records) {
      if (!budget_audit_ok(r, *result.budget)) ++result.audit_violations;
    }
  }

  const Report report = summarize(records);
  result.text = report_to_text(report);
  if (result.budget) {
    result.text += "\nBudget audit (fm_calls <= ticks * " +
                   std::to_string(*result.budget) + "): " +
                   std::to_string(result.audit_violations) + " violations in " +
                   std::to_string(result.records) + " runs\n";
  }
  fs::create_directories(out_dir);
  {
    std::ofstream out = open_out(out_dir / "summary.csv");
    write_summary_csv(out, report);
  }
  open_out(out_dir / "summary.json") << report_to_json(report) << '\n';
  open_out(out_dir / "summary.txt") << result.text;
  return result;
}

}  // namespace rhseed
