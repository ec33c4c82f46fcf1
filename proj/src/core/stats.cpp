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

#include "core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/check.hpp"

namespace rhseed {

namespace {

std::vector<double> pooled(std::span<const double> xs,
                           std::span<const double> ys) {
  std::vector<double> all(xs.begin(), xs.end());
  all.insert(all.end(), ys.begin(), ys.end());
  return all;
}

double u_statistic(std::span<const double> ranks, std::size_t nx) {
  const double rank_sum = std::accumulate(ranks.begin(), ranks.begin() + nx, 0.0);
  return rank_sum - static_cast<double>(nx) * (nx + 1) / 2.0;
}

}  // namespace

std::vector<double> midranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double mann_whitney_normal_p(std::span<const double> xs,
                             std::span<const double> ys) {
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());
  const double n = nx + ny;
  const std::vector<double> all = pooled(xs, ys);
  const std::vector<double> ranks = midranks(all);
  const double u = u_statistic(ranks, xs.size());

  std::vector<double> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  double tie_term = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  if (n < 2) return 1.0;
  const double variance =
      nx * ny / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
  if (variance <= 0.0) return 1.0;
  const double mu = nx * ny / 2.0;
  const double z = std::max(std::abs(u - mu) - 0.5, 0.0) / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

double mann_whitney_exact_p(std::span<const double> xs,
                            std::span<const double> ys) {
  const std::vector<double> ranks = midranks(pooled(xs, ys));
  const int n = static_cast<int>(ranks.size());
  const int k = static_cast<int>(xs.size());
  // Doubled midranks are integers, so the rank-sum distribution can be
  // counted exactly: ways[j][s] = #subsets of size j with doubled sum s.
  std::vector<int> doubled(n);
  for (int i = 0; i < n; ++i) doubled[i] = static_cast<int>(std::lround(2.0 * ranks[i]));
  const int max_sum = std::accumulate(doubled.begin(), doubled.end(), 0);
  std::vector<std::vector<double>> ways(k + 1, std::vector<double>(max_sum + 1, 0.0));
  ways[0][0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const int r = doubled[i];
    for (int j = std::min(k, i + 1); j >= 1; --j) {
      auto& dst = ways[j];
      const auto& src = ways[j - 1];
      for (int s = max_sum; s >= r; --s) dst[s] += src[s - r];
    }
  }
  // Deviation of the doubled rank sum from its mean, k * (n + 1).
  const int observed = std::accumulate(doubled.begin(), doubled.begin() + k, 0);
  const int centre = k * (n + 1);
  const int observed_dev = std::abs(observed - centre);
  double extreme = 0.0;
  double total = 0.0;
  for (int s = 0; s <= max_sum; ++s) {
    const double w = ways[k][s];
    if (w == 0.0) continue;
    total += w;
    if (std::abs(s - centre) >= observed_dev) extreme += w;
  }
  return std::min(1.0, extreme / total);
}

SignificanceCell mann_whitney_u(std::span<const double> xs,
                                std::span<const double> ys) {
  RHSEED_CHECK(!xs.empty() && !ys.empty(), "both samples must be non-empty");
  const std::vector<double> ranks = midranks(pooled(xs, ys));
  SignificanceCell cell;
  const double product = static_cast<double>(xs.size()) * ys.size();
  cell.u_xy = u_statistic(ranks, xs.size());
  cell.u_yx = product - cell.u_xy;

  const auto [lo, hi] = std::minmax_element(ranks.begin(), ranks.end());
  if (*lo == *hi) {
    // Every value tied: no information either way.
    cell.p_two_tailed = 1.0;
    return cell;
  }
  const int pooled_size = static_cast<int>(xs.size() + ys.size());
  cell.exact = pooled_size <= kExactMaxPooled;
  cell.p_two_tailed = cell.exact ? mann_whitney_exact_p(xs, ys)
                                 : mann_whitney_normal_p(xs, ys);
  const double mx = mean(xs);
  const double my = mean(ys);
  if (cell.p_two_tailed < kSignificance && mx != my) {
    cell.better = mx > my ? Better::kX : Better::kY;
  }
  return cell;
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double standard_error(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
}

}  // namespace rhseed
