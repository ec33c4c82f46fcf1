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

#ifndef RHSEED_CORE_OUTPUT_HPP_
#define RHSEED_CORE_OUTPUT_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "core/experiment.hpp"

namespace rhseed {

inline constexpr const char* kRunsFile = "runs.csv";
inline constexpr const char* kExperimentFile = "experiment.json";

std::string experiment_to_json(const ExperimentConfig& config);
ExperimentConfig experiment_from_json(const std::string& text);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Runs `config`, streaming rows into <dir>/runs.csv, then writes
// experiment.json and the summaries. Returns the number of records.
std::size_t run_experiment_to_dir(const ExperimentConfig& config,
                                  const std::filesystem::path& dir,
                                  int threads = 0,
                                  const ProgressFn& progress = {});

struct DirReport {
  std::string text;
  std::size_t records = 0;
  std::size_t audit_violations = 0;
  std::optional<int> budget;
};

// Regenerates summary.{csv,json,txt} in `out_dir` from <in_dir>/runs.csv.
DirReport report_dir(const std::filesystem::path& in_dir,
                     const std::filesystem::path& out_dir);

}  // namespace rhseed

#endif  // RHSEED_CORE_OUTPUT_HPP_
