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

#include "wordalign/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <fmt/format.h>

namespace wordalign {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> columns;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      columns.push_back(line.substr(start));
      return columns;
    }
    columns.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
  });
}

}  // namespace

bool EvaluationSet::fully_judged() const {
  return std::all_of(items.begin(), items.end(),
                     [](const EvaluationItem& item) { return item.human_score.has_value(); });
}

EvaluationSet read_tsv(std::istream& in, std::string name) {
  EvaluationSet set;
  set.name = std::move(name);
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with('#') || is_blank(line)) continue;

    const auto columns = split_tabs(line);
    if (columns.size() != 3 && columns.size() != 4) {
      throw DatasetFormatError(fmt::format(
          "line {}: expected 3 or 4 tab-separated columns, found {}", line_no, columns.size()));
    }

    EvaluationItem item;
    item.segment_id = std::string(columns[0]);
    item.hypothesis = std::string(columns[1]);
    item.reference = std::string(columns[2]);
    if (item.segment_id.empty()) {
      throw DatasetFormatError(fmt::format("line {}: empty segment id", line_no));
    }
    if (columns.size() == 4) {
      const std::string_view field = columns[3];
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
        throw DatasetFormatError(
            fmt::format("line {}: human score '{}' is not a finite number", line_no, field));
      }
      item.human_score = value;
    }
    if (!seen.insert(item.segment_id).second) {
      throw DatasetFormatError(
          fmt::format("line {}: duplicate segment id '{}'", line_no, item.segment_id));
    }
    set.items.push_back(std::move(item));
  }
  return set;
}

void write_tsv(const EvaluationSet& set, std::ostream& out) {
  for (const auto& item : set.items) {
    out << item.segment_id << '\t' << item.hypothesis << '\t' << item.reference;
    if (item.human_score) out << '\t' << fmt::format("{}", *item.human_score);
    out << '\n';
  }
}

void write_scores(const EvaluationSet& set, std::span<const double> scores, std::ostream& out) {
  if (scores.size() != set.items.size()) {
    throw std::invalid_argument(fmt::format("{} scores for {} dataset items", scores.size(),
                                            set.items.size()));
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out << fmt::format("{}\t{:.6f}\n", set.items[i].segment_id, scores[i]);
  }
}

void write_sweep(std::span<const SweepRow> rows, std::ostream& out) {
  out << "threshold,metric,tau\n";
  for (const auto& row : rows) {
    out << fmt::format("{:.2f},{},{:.4f}\n", row.threshold, row.metric, row.tau);
  }
}

}  // namespace wordalign
