//  Copyright 2026 The wordalign Authors. All Rights Reserved.
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "wordalign/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace wordalign {

namespace {

std::int64_t pairs_within(std::int64_t group) { return group * (group - 1) / 2; }

// Sum of pairs_within() over runs of equal adjacent values.
template <typename Equal>
std::int64_t tied_pairs(std::size_t n, Equal equal) {
  std::int64_t total = 0;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || !equal(i - 1, i)) {
      total += pairs_within(static_cast<std::int64_t>(i - start));
      start = i;
    }
  }
  return total;
}

// Sorts `v` ascending and returns the number of strict inversions.
std::int64_t sort_counting_inversions(std::vector<double>& v) {
  std::vector<double> buffer(v.size());
  std::int64_t inversions = 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (v[b] < v[a]) {
          inversions += static_cast<std::int64_t>(mid - a);
          buffer[out++] = v[b++];
        } else {
          buffer[out++] = v[a++];
        }
      }
      while (a < mid) buffer[out++] = v[a++];
      while (b < hi) buffer[out++] = v[b++];
    }
    v.swap(buffer);
  }
  return inversions;
}

}  // namespace

KendallCounts kendall_counts(std::span<const double> human, std::span<const double> metric) {
  const std::size_t n = human.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (human[a] != human[b]) return human[a] < human[b];
    return metric[a] < metric[b];
  });

  const std::int64_t human_ties =
      tied_pairs(n, [&](std::size_t a, std::size_t b) { return human[order[a]] == human[order[b]]; });
  const std::int64_t joint_ties = tied_pairs(n, [&](std::size_t a, std::size_t b) {
    return human[order[a]] == human[order[b]] && metric[order[a]] == metric[order[b]];
  });

  std::vector<double> sequence(n);
  for (std::size_t i = 0; i < n; ++i) sequence[i] = metric[order[i]];
  const std::int64_t discordant = sort_counting_inversions(sequence);
  const std::int64_t metric_ties =
      tied_pairs(n, [&](std::size_t a, std::size_t b) { return sequence[a] == sequence[b]; });

  const std::int64_t all = pairs_within(static_cast<std::int64_t>(n));
  KendallCounts counts;
  counts.discordant = discordant;
  counts.concordant = all - human_ties - metric_ties + joint_ties - discordant;
  counts.tied_human_only = human_ties - joint_ties;
  counts.tied_metric_only = metric_ties - joint_ties;
  counts.tied_both = joint_ties;
  return counts;
}

double tau_b_from_counts(const KendallCounts& c) {
  const std::int64_t untied = c.concordant + c.discordant;
  const std::int64_t human_side = untied + c.tied_human_only;
  const std::int64_t metric_side = untied + c.tied_metric_only;
  if (human_side == 0 || metric_side == 0) {
    throw UndefinedCorrelation("Kendall's tau is undefined: scores on one side are all tied");
  }
  return static_cast<double>(c.concordant - c.discordant) /
         std::sqrt(static_cast<double>(human_side) * static_cast<double>(metric_side));
}

double kendall_tau_b(std::span<const double> human, std::span<const double> metric) {
  if (human.size() != metric.size()) {
    throw std::invalid_argument("human and metric score vectors differ in length");
  }
  if (human.size() < 2) throw std::invalid_argument("Kendall's tau needs at least two pairs");
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(human.begin(), human.end(), finite) ||
      !std::all_of(metric.begin(), metric.end(), finite)) {
    throw std::invalid_argument("Kendall's tau inputs must be finite");
  }
  return tau_b_from_counts(kendall_counts(human, metric));
}

}  // namespace wordalign
