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

#include "wordalign/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wordalign {

namespace {

constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct SquareSolution {
  std::vector<std::size_t> col_of_row;
  std::vector<std::size_t> row_of_col;
  std::vector<double> row_potential;
  std::vector<double> col_potential;
};

// Shortest augmenting path Hungarian method on an n x n cost matrix.
SquareSolution minimize_square(const DenseMatrix& cost) {
  const std::size_t n = cost.rows();
  const double inf = std::numeric_limits<double>::infinity();

  // 1-based; column 0 is the virtual root of each augmenting search.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<double> minv(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  SquareSolution s;
  s.col_of_row.assign(n, kUnmatched);
  s.row_of_col.assign(n, kUnmatched);
  for (std::size_t j = 1; j <= n; ++j) {
    s.col_of_row[p[j] - 1] = j - 1;
    s.row_of_col[j - 1] = p[j] - 1;
  }
  s.row_potential.assign(u.begin() + 1, u.end());
  s.col_potential.assign(v.begin() + 1, v.end());
  return s;
}

// Rewrites an optimal perfect matching into the lexicographically smallest
// one. Every optimal matching uses only edges that are tight under the
// optimal dual, so the search is confined to that subgraph.
class LexicographicRefiner {
 public:
  LexicographicRefiner(const DenseMatrix& cost, SquareSolution& s, double tolerance)
      : n_(cost.rows()), s_(s), tight_(n_ * n_), fixed_col_(n_, 0), visited_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const double reduced = cost(i, j) - s.row_potential[i] - s.col_potential[j];
        tight_[i * n_ + j] = reduced <= tolerance || s.col_of_row[i] == j;
      }
    }
  }

  void refine(std::size_t rows_to_fix) {
    for (std::size_t i = 0; i < rows_to_fix; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (fixed_col_[j] || !tight_[i * n_ + j]) continue;
        if (s_.col_of_row[i] == j || reroute(i, j)) {
          fixed_col_[j] = 1;
          break;
        }
      }
    }
  }

 private:
  // Tries to give column `j` to row `i`, moving the row currently on `j`
  // along an alternating path that ends at the column `i` releases.
  bool reroute(std::size_t i, std::size_t j) {
    const std::size_t released = s_.col_of_row[i];
    const std::size_t displaced = s_.row_of_col[j];
    std::fill(visited_.begin(), visited_.end(), 0);
    visited_[j] = 1;
    if (!augment(displaced, released)) return false;
    s_.col_of_row[i] = j;
    s_.row_of_col[j] = i;
    return true;
  }

  bool augment(std::size_t row, std::size_t target) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (visited_[k] || fixed_col_[k] || !tight_[row * n_ + k]) continue;
      visited_[k] = 1;
      if (k == target || augment(s_.row_of_col[k], target)) {
        s_.col_of_row[row] = k;
        s_.row_of_col[k] = row;
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  SquareSolution& s_;
  std::vector<char> tight_;
  std::vector<char> fixed_col_;
  std::vector<char> visited_;
};

}  // namespace

AssignmentResult solve_max_assignment(const DenseMatrix& weights) {
  const std::size_t rows = weights.rows();
  const std::size_t cols = weights.cols();
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("assignment requires a non-empty weight matrix");
  }

  double max_entry = 0.0;  // dummies weigh 0
  double min_entry = 0.0;
  for (double w : weights.data()) {
    if (!std::isfinite(w)) throw std::invalid_argument("assignment weight is not finite");
    max_entry = std::max(max_entry, w);
    min_entry = std::min(min_entry, w);
  }

  const std::size_t n = std::max(rows, cols);
  DenseMatrix cost(n, n, max_entry);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) cost(i, j) = max_entry - weights(i, j);

  SquareSolution solution = minimize_square(cost);
  const std::vector<std::size_t> hungarian_cols = solution.col_of_row;

  const double range = std::max(1.0, max_entry - min_entry);
  const double tolerance = 64.0 * static_cast<double>(n) *
                           std::numeric_limits<double>::epsilon() * range;
  LexicographicRefiner(cost, solution, tolerance).refine(rows);

  const auto collect = [&](const std::vector<std::size_t>& col_of_row) {
    AssignmentResult result;
    for (std::size_t i = 0; i < rows; ++i) {
      const std::size_t j = col_of_row[i];
      if (j >= cols) continue;
      result.pairs.emplace_back(i, j);
      result.total_weight += weights(i, j);
    }
    return result;
  };

  AssignmentResult refined = collect(solution.col_of_row);
  AssignmentResult plain = collect(hungarian_cols);
  // Tolerance-tight edges can admit a matching a few ulps worse than the
  // Hungarian one; anything beyond rounding noise falls back to it.
  const double slack = static_cast<double>(n) * tolerance;
  return refined.total_weight >= plain.total_weight - slack ? refined : plain;
}

}  // namespace wordalign
