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

#include "wordalign/batch.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace wordalign {

namespace {

// Runs fn(i) for i in [0, n) over contiguous chunks, one per thread.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      workers.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Vocabulary collect_vocabulary(const EvaluationSet& set, TokenizerPolicy policy,
                              bool lowercase_fallback) {
  Vocabulary vocabulary;
  const auto add = [&](const std::string& text) {
    for (auto& token : tokenize(text, policy).tokens) {
      if (lowercase_fallback) vocabulary.insert(ascii_lowercase(token));
      vocabulary.insert(std::move(token));
    }
  };
  for (const auto& item : set.items) {
    add(item.hypothesis);
    add(item.reference);
  }
  return vocabulary;
}

PreparedDataset prepare_dataset(const EvaluationSet& set, const EmbeddingTable& table,
                                TokenizerPolicy policy, bool lowercase_fallback) {
  PreparedDataset data;
  data.hypotheses.reserve(set.items.size());
  data.references.reserve(set.items.size());
  for (const auto& item : set.items) {
    data.hypotheses.push_back(
        resolve_segment(tokenize(item.hypothesis, policy), table, lowercase_fallback));
    data.references.push_back(
        resolve_segment(tokenize(item.reference, policy), table, lowercase_fallback));
    for (const auto* s : {&data.hypotheses.back(), &data.references.back()}) {
      data.token_count += s->size();
      data.oov_count += s->oov_count();
    }
  }
  return data;
}

std::vector<double> score_dataset(const PreparedDataset& data, const EmbeddingTable& table,
                                  const MetricConfig& config, unsigned threads) {
  config.validate();
  std::vector<double> scores(data.size());
  parallel_for(data.size(), threads, [&](std::size_t i) {
    const DenseMatrix values =
        similarity_values(data.hypotheses[i], data.references[i], table, config.oov);
    scores[i] = score_from_matrix(config.metric, apply_threshold(values, config.threshold));
  });
  return scores;
}

std::vector<std::vector<std::vector<double>>> score_dataset_grid(
    const PreparedDataset& data, const EmbeddingTable& table, OovPolicy oov,
    std::span<const Metric> metrics, std::span<const double> thresholds, unsigned threads) {
  for (double threshold : thresholds) MetricConfig{.threshold = threshold}.validate();

  std::vector<std::vector<std::vector<double>>> scores(
      metrics.size(),
      std::vector<std::vector<double>>(thresholds.size(), std::vector<double>(data.size())));
  parallel_for(data.size(), threads, [&](std::size_t i) {
    const DenseMatrix values =
        similarity_values(data.hypotheses[i], data.references[i], table, oov);
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
      const DenseMatrix cut = apply_threshold(values, thresholds[t]);
      for (std::size_t m = 0; m < metrics.size(); ++m) {
        scores[m][t][i] = score_from_matrix(metrics[m], cut);
      }
    }
  });
  return scores;
}

}  // namespace wordalign
