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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordalign/embedding_store.hpp"
#include "wordalign/matrix.hpp"
#include "wordalign/text_pipeline.hpp"

namespace wordalign {

enum class Metric {
  aas,  // average alignment similarity, m:n
  mas,  // maximum alignment similarity, 1:n, symmetrized
  has,  // Hungarian alignment similarity, 1:1
};

enum class OovPolicy {
  surface_match,  // identical OOV strings score 1, anything else 0
  zero,           // any pair involving an OOV token scores 0
};

Metric parse_metric(std::string_view name);
std::string_view to_string(Metric metric);  // "AAS", "MAS", "HAS"
OovPolicy parse_oov_policy(std::string_view name);

struct MetricConfig {
  Metric metric = Metric::mas;
  /// Word pairs with similarity strictly below this are cut to 0.
  double threshold = 0.0;
  OovPolicy oov = OovPolicy::surface_match;
  bool lowercase_fallback = false;

  /// Throws std::invalid_argument unless 0 <= threshold <= 1.
  void validate() const;
};

/// A segment whose tokens have been looked up once. `rows[i]` is the
/// embedding row of `tokens[i]`, or empty when the token is OOV.
struct ResolvedSegment {
  std::vector<std::string> tokens;
  std::vector<std::optional<std::size_t>> rows;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  std::size_t oov_count() const;
};

ResolvedSegment resolve_segment(const Segment& segment, const EmbeddingTable& table,
                                bool lowercase_fallback);

/// Similarity of two tokens: cosine of their vectors when both resolve,
/// otherwise decided by the OOV policy.
double word_similarity(std::string_view a, std::string_view b, const EmbeddingTable& table,
                       const MetricConfig& config);

struct PairSimilarityMatrix {
  DenseMatrix values;       // |x| x |y| raw similarities
  DenseMatrix thresholded;  // entries < threshold replaced by 0
};

/// Raw |x| x |y| similarity values.
DenseMatrix similarity_values(const ResolvedSegment& x, const ResolvedSegment& y,
                              const EmbeddingTable& table, OovPolicy oov);

DenseMatrix apply_threshold(const DenseMatrix& values, double threshold);

PairSimilarityMatrix build_matrix(const Segment& x, const Segment& y,
                                  const EmbeddingTable& table, const MetricConfig& config);

// Scores over an already thresholded matrix (rows = hypothesis). An empty
// dimension scores 0. These are exactly symmetric under transposition.
double aas_from_matrix(const DenseMatrix& m);
double mas_asym_from_matrix(const DenseMatrix& m);  // rows against columns
double mas_from_matrix(const DenseMatrix& m);
double has_from_matrix(const DenseMatrix& m);
double score_from_matrix(Metric metric, const DenseMatrix& m);

double score_aas(const Segment& x, const Segment& y, const EmbeddingTable& table,
                 const MetricConfig& config);
double score_mas_asym(const Segment& a, const Segment& b, const EmbeddingTable& table,
                      const MetricConfig& config);
double score_mas(const Segment& x, const Segment& y, const EmbeddingTable& table,
                 const MetricConfig& config);
double score_has(const Segment& x, const Segment& y, const EmbeddingTable& table,
                 const MetricConfig& config);

/// Dispatches on config.metric.
double score(const Segment& x, const Segment& y, const EmbeddingTable& table,
             const MetricConfig& config);

}  // namespace wordalign
