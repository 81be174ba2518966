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

#include <cmath>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wordalign/embedding_store.hpp"
#include "wordalign/text_pipeline.hpp"

namespace fixtures {

inline wordalign::EmbeddingTable make_table(
    std::initializer_list<std::pair<std::string, std::vector<double>>> rows) {
  wordalign::EmbeddingTable table(rows.begin()->second.size());
  for (const auto& [token, v] : rows) table.insert(token, v);
  return table;
}

// a=(1,0), b=(0,1), c=(1,1)/sqrt(2)
inline wordalign::EmbeddingTable abc_table() {
  const double h = 1.0 / std::sqrt(2.0);
  return make_table({{"a", {1.0, 0.0}}, {"b", {0.0, 1.0}}, {"c", {h, h}}});
}

inline wordalign::Segment seg(std::initializer_list<const char*> tokens) {
  wordalign::Segment s;
  for (const char* t : tokens) {
    if (!s.source_text.empty()) s.source_text += ' ';
    s.source_text += t;
    s.tokens.emplace_back(t);
  }
  return s;
}

inline wordalign::Segment seg(const std::vector<std::string>& tokens) {
  wordalign::Segment s;
  s.tokens = tokens;
  for (const auto& t : tokens) s.source_text += (s.source_text.empty() ? "" : " ") + t;
  return s;
}

// Random table "w0".."w{n-1}" with Gaussian components.
inline std::pair<wordalign::EmbeddingTable, std::vector<std::vector<double>>> random_table(
    std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  std::normal_distribution<double> normal;
  wordalign::EmbeddingTable table(dim);
  std::vector<std::vector<double>> vectors;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v(dim);
    for (double& c : v) c = normal(rng);
    table.insert("w" + std::to_string(i), v);
    vectors.push_back(std::move(v));
  }
  return {std::move(table), std::move(vectors)};
}

// Random token-index sequence of length in [min_len, max_len].
inline std::vector<std::size_t> random_indices(std::mt19937_64& rng, std::size_t vocab,
                                               std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, vocab - 1);
  std::vector<std::size_t> out(len(rng));
  for (auto& i : out) i = pick(rng);
  return out;
}

inline wordalign::Segment seg_from_indices(const std::vector<std::size_t>& indices) {
  std::vector<std::string> tokens;
  for (auto i : indices) tokens.push_back("w" + std::to_string(i));
  return seg(tokens);
}

}  // namespace fixtures
