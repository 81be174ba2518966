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

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordalign {

class DatasetFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvaluationItem {
  std::string segment_id;
  std::string hypothesis;
  std::string reference;
  std::optional<double> human_score;

  friend bool operator==(const EvaluationItem&, const EvaluationItem&) = default;
};

struct EvaluationSet {
  std::string name;
  std::vector<EvaluationItem> items;

  bool fully_judged() const;
};

/// Reads "segment_id \t hypothesis \t reference [\t human_score]" records.
/// Lines starting with '#' and blank lines are skipped. Errors carry the
/// 1-based line number.
EvaluationSet read_tsv(std::istream& in, std::string name = {});

/// Inverse of read_tsv. Human scores use the shortest round-trip form.
void write_tsv(const EvaluationSet& set, std::ostream& out);

/// "segment_id \t score" per item, scores to 6 decimals.
void write_scores(const EvaluationSet& set, std::span<const double> scores, std::ostream& out);

struct SweepRow {
  double threshold = 0.0;
  std::string metric;
  double tau = 0.0;
};

/// CSV "threshold,metric,tau"; thresholds to 2 decimals, tau to 4.
void write_sweep(std::span<const SweepRow> rows, std::ostream& out);

}  // namespace wordalign
