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

#include <cstddef>
#include <utility>
#include <vector>

#include "wordalign/matrix.hpp"

namespace wordalign {

struct AssignmentResult {
  /// (row, column) pairs sorted by row. Rows and columns are each distinct
  /// and there are exactly min(rows, cols) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double total_weight = 0.0;
};

/// Maximum-weight one-to-one assignment (Kuhn-Munkres).
///
/// Rectangular inputs are padded to square with zero-weight dummies, and the
/// problem is solved as minimization of (max_entry - w) in O(n^3) for
/// n = max(rows, cols). Among all optimal assignments the one with the
/// lexicographically smallest sorted pair list is returned, so the result
/// does not depend on platform or call history.
///
/// Throws std::invalid_argument for an empty dimension or a non-finite entry.
AssignmentResult solve_max_assignment(const DenseMatrix& weights);

}  // namespace wordalign
