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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordalign/embedding_store.hpp"
#include "wordalign/similarity_metrics.hpp"
#include "wordalign/text_pipeline.hpp"

namespace wordalign::cli {

// Process exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kRuntimeError = 1;
inline constexpr int kUsageError = 2;

struct RunOptions {
  std::filesystem::path embeddings;
  EmbeddingFormat format = EmbeddingFormat::automatic;
  std::filesystem::path dataset;
  TokenizerPolicy tokenizer = TokenizerPolicy::punct;
  OovPolicy oov = OovPolicy::surface_match;
  bool lowercase_fallback = false;
  bool full_vocabulary = false;  // skip the dataset-vocabulary load filter
  unsigned threads = 0;          // 0 = hardware concurrency
};

/// Summary written to the diagnostic stream after each command.
struct RunReport {
  std::string command;
  std::string dataset;
  std::string metric;
  std::optional<double> threshold;
  std::size_t items = 0;
  std::size_t tokens = 0;
  std::size_t oov_tokens = 0;
  double elapsed_seconds = 0.0;
  std::optional<double> tau;

  std::string to_string() const;
};

std::vector<double> default_threshold_grid();

// Each command writes data to `out` (or the output file when given) and the
// report or error text to `err`, and returns a process exit code.
int cmd_score(const RunOptions& options, Metric metric, double threshold,
              const std::optional<std::filesystem::path>& output, std::ostream& out,
              std::ostream& err);

int cmd_evaluate(const RunOptions& options, Metric metric, double threshold, std::ostream& out,
                 std::ostream& err);

int cmd_sweep(const RunOptions& options, const std::vector<Metric>& metrics,
              const std::vector<double>& grid,
              const std::optional<std::filesystem::path>& output, std::ostream& out,
              std::ostream& err);

/// Parses `args` (without the program name) and runs the subcommand.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wordalign::cli
