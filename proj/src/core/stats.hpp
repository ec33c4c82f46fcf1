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

#ifndef RHSEED_CORE_STATS_HPP_
#define RHSEED_CORE_STATS_HPP_

#include <span>
#include <vector>

namespace rhseed {

inline constexpr double kSignificance = 0.05;

// Pooled sample sizes up to this use the exact permutation distribution of U
// (ties handled through midranks); larger samples use the normal
// approximation.
inline constexpr int kExactMaxPooled = 40;

enum class Better { kNone, kX, kY };

struct SignificanceCell {
  double u_xy = 0.0;  // U for xs: pairs (x, y) with x > y, ties count 1/2
  double u_yx = 0.0;
  double p_two_tailed = 1.0;
  Better better = Better::kNone;  // set iff p < 0.05 and the means differ
  bool exact = false;
};

// Midranks (1-based) of `values`, in input order.
std::vector<double> midranks(std::span<const double> values);

// Two-tailed p from the normal approximation with tie-corrected variance and
// a 0.5 continuity correction.
double mann_whitney_normal_p(std::span<const double> xs,
                             std::span<const double> ys);

// Two-tailed p from the exact permutation distribution of U given the
// observed midranks. Cost grows with the pooled size squared times n_x.
double mann_whitney_exact_p(std::span<const double> xs,
                            std::span<const double> ys);

// Two-sample Mann-Whitney U test. Requires both samples non-empty.
SignificanceCell mann_whitney_u(std::span<const double> xs,
                                std::span<const double> ys);

double mean(std::span<const double> xs);
// Standard error of the mean with the n - 1 sample variance; 0 for n < 2.
double standard_error(std::span<const double> xs);

}  // namespace rhseed

#endif  // RHSEED_CORE_STATS_HPP_
