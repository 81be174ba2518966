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

#include "wordalign/similarity_metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "wordalign/assignment.hpp"

namespace wordalign {

namespace {

double pair_similarity(const EmbeddingTable& table, OovPolicy oov, std::string_view a_token,
                       std::optional<std::size_t> a_row, std::string_view b_token,
                       std::optional<std::size_t> b_row) {
  if (a_row && b_row) {
    // exact self-similarity instead of a rounded dot product
    if (*a_row == *b_row) return table.row(*a_row).norm > 0.0 ? 1.0 : 0.0;
    return cosine(table.row(*a_row), table.row(*b_row));
  }
  if (oov == OovPolicy::surface_match && a_token == b_token) return 1.0;
  return 0.0;
}

// AAS and HAS are evaluated in one canonical orientation so that swapping
// hypothesis and reference reproduces the same floating-point operations:
// fewer rows than columns, and for square matrices whichever of m, m^T is
// lexicographically smaller.
bool use_transpose(const DenseMatrix& m) {
  if (m.rows() != m.cols()) return m.rows() > m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return m(j, i) < m(i, j);
    }
  }
  return false;
}

}  // namespace

Metric parse_metric(std::string_view name) {
  if (name == "aas" || name == "AAS") return Metric::aas;
  if (name == "mas" || name == "MAS") return Metric::mas;
  if (name == "has" || name == "HAS") return Metric::has;
  throw std::invalid_argument(fmt::format("unknown metric '{}'", name));
}

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::aas: return "AAS";
    case Metric::mas: return "MAS";
    case Metric::has: return "HAS";
  }
  return "?";
}

OovPolicy parse_oov_policy(std::string_view name) {
  if (name == "surface") return OovPolicy::surface_match;
  if (name == "zero") return OovPolicy::zero;
  throw std::invalid_argument(fmt::format("unknown OOV policy '{}'", name));
}

void MetricConfig::validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument(fmt::format("threshold {} is outside [0, 1]", threshold));
  }
}

std::size_t ResolvedSegment::oov_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.has_value(); }));
}

ResolvedSegment resolve_segment(const Segment& segment, const EmbeddingTable& table,
                                bool lowercase_fallback) {
  ResolvedSegment resolved;
  resolved.tokens = segment.tokens;
  resolved.rows.reserve(segment.tokens.size());
  for (const auto& token : segment.tokens) {
    resolved.rows.push_back(resolve(table, token, lowercase_fallback));
  }
  return resolved;
}

double word_similarity(std::string_view a, std::string_view b, const EmbeddingTable& table,
                       const MetricConfig& config) {
  return pair_similarity(table, config.oov, a, resolve(table, a, config.lowercase_fallback), b,
                         resolve(table, b, config.lowercase_fallback));
}

DenseMatrix similarity_values(const ResolvedSegment& x, const ResolvedSegment& y,
                              const EmbeddingTable& table, OovPolicy oov) {
  DenseMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      m(i, j) = pair_similarity(table, oov, x.tokens[i], x.rows[i], y.tokens[j], y.rows[j]);
    }
  }
  return m;
}

DenseMatrix apply_threshold(const DenseMatrix& values, double threshold) {
  DenseMatrix cut = values;
  for (double& v : cut.data()) {
    if (v < threshold) v = 0.0;
  }
  return cut;
}

PairSimilarityMatrix build_matrix(const Segment& x, const Segment& y,
                                  const EmbeddingTable& table, const MetricConfig& config) {
  config.validate();
  PairSimilarityMatrix result;
  result.values =
      similarity_values(resolve_segment(x, table, config.lowercase_fallback),
                        resolve_segment(y, table, config.lowercase_fallback), table, config.oov);
  result.thresholded = apply_threshold(result.values, config.threshold);
  return result;
}

double aas_from_matrix(const DenseMatrix& m) {
  if (m.empty()) return 0.0;
  const bool t = use_transpose(m);
  const std::size_t outer = t ? m.cols() : m.rows();
  const std::size_t inner = t ? m.rows() : m.cols();
  double sum = 0.0;
  for (std::size_t a = 0; a < outer; ++a) {
    for (std::size_t b = 0; b < inner; ++b) sum += t ? m(b, a) : m(a, b);
  }
  return sum / static_cast<double>(m.rows() * m.cols());
}

double mas_asym_from_matrix(const DenseMatrix& m) {
  if (m.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    sum += *std::max_element(row.begin(), row.end());
  }
  return sum / static_cast<double>(m.rows());
}

double mas_from_matrix(const DenseMatrix& m) {
  if (m.empty()) return 0.0;
  double column_sum = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.rows(); ++i) best = std::max(best, m(i, j));
    column_sum += best;
  }
  const double forward = mas_asym_from_matrix(m);
  const double backward = column_sum / static_cast<double>(m.cols());
  return (forward + backward) / 2.0;
}

double has_from_matrix(const DenseMatrix& m) {
  if (m.empty()) return 0.0;
  const AssignmentResult matching =
      use_transpose(m) ? solve_max_assignment(m.transposed()) : solve_max_assignment(m);
  return matching.total_weight / static_cast<double>(std::min(m.rows(), m.cols()));
}

double score_from_matrix(Metric metric, const DenseMatrix& m) {
  switch (metric) {
    case Metric::aas: return aas_from_matrix(m);
    case Metric::mas: return mas_from_matrix(m);
    case Metric::has: return has_from_matrix(m);
  }
  throw std::logic_error("unhandled metric");
}

double score_aas(const Segment& x, const Segment& y, const EmbeddingTable& table,
                 const MetricConfig& config) {
  return aas_from_matrix(build_matrix(x, y, table, config).thresholded);
}

double score_mas_asym(const Segment& a, const Segment& b, const EmbeddingTable& table,
                      const MetricConfig& config) {
  return mas_asym_from_matrix(build_matrix(a, b, table, config).thresholded);
}

double score_mas(const Segment& x, const Segment& y, const EmbeddingTable& table,
                 const MetricConfig& config) {
  return mas_from_matrix(build_matrix(x, y, table, config).thresholded);
}

double score_has(const Segment& x, const Segment& y, const EmbeddingTable& table,
                 const MetricConfig& config) {
  return has_from_matrix(build_matrix(x, y, table, config).thresholded);
}

double score(const Segment& x, const Segment& y, const EmbeddingTable& table,
             const MetricConfig& config) {
  return score_from_matrix(config.metric, build_matrix(x, y, table, config).thresholded);
}

}  // namespace wordalign
