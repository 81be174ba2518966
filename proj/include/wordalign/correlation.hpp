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

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

namespace wordalign {

/// Raised when τ is undefined because one side has no variation.
class UndefinedCorrelation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pair counts behind Kendall's τ-b over n observations.
struct KendallCounts {
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t tied_human_only = 0;
  std::int64_t tied_metric_only = 0;
  std::int64_t tied_both = 0;
};

/// Counts pairs in O(n log n): sort by (human, metric), then count the
/// inversions of the metric sequence with a merge sort.
KendallCounts kendall_counts(std::span<const double> human, std::span<const double> metric);

/// τ-b = (C - D) / sqrt((C + D + T_h)(C + D + T_m)) from precomputed counts.
/// Throws UndefinedCorrelation when the denominator is zero.
double tau_b_from_counts(const KendallCounts& counts);

/// Kendall's τ-b between paired human and metric scores.
///
/// Throws std::invalid_argument for mismatched lengths, fewer than two
/// pairs or non-finite scores, and UndefinedCorrelation when either side
/// is constant.
double kendall_tau_b(std::span<const double> human, std::span<const double> metric);

}  // namespace wordalign
