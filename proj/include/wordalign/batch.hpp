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
#include <span>
#include <vector>

#include "wordalign/dataset_io.hpp"
#include "wordalign/embedding_store.hpp"
#include "wordalign/similarity_metrics.hpp"
#include "wordalign/text_pipeline.hpp"

namespace wordalign {

/// Every token that can be looked up while scoring `set`, including the
/// lowercased forms when the fallback is enabled. Used to restrict loading.
Vocabulary collect_vocabulary(const EvaluationSet& set, TokenizerPolicy policy,
                              bool lowercase_fallback);

/// Tokenized and resolved hypothesis/reference pairs of a dataset.
struct PreparedDataset {
  std::vector<ResolvedSegment> hypotheses;
  std::vector<ResolvedSegment> references;
  std::size_t token_count = 0;
  std::size_t oov_count = 0;  // lookups (after fallback) that found nothing

  std::size_t size() const { return hypotheses.size(); }
};

PreparedDataset prepare_dataset(const EvaluationSet& set, const EmbeddingTable& table,
                                TokenizerPolicy policy, bool lowercase_fallback);

/// Per-item scores in input order. `threads` == 0 uses the hardware
/// concurrency; the result never depends on the thread count.
std::vector<double> score_dataset(const PreparedDataset& data, const EmbeddingTable& table,
                                  const MetricConfig& config, unsigned threads = 1);

/// Scores for every (metric, threshold) combination, indexed
/// [metric][threshold][item]. Each similarity matrix is built once and
/// re-thresholded per grid value.
std::vector<std::vector<std::vector<double>>> score_dataset_grid(
    const PreparedDataset& data, const EmbeddingTable& table, OovPolicy oov,
    std::span<const Metric> metrics, std::span<const double> thresholds, unsigned threads = 1);

}  // namespace wordalign
