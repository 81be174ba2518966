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

// End-to-end acceptance checks. Prints one PASS/FAIL/SKIP line per
// criterion and exits nonzero if any criterion fails.
//
// The reproduction check against real WMT15 data runs only when both
//   WORDALIGN_EMBEDDINGS   word2vec model (e.g. GoogleNews-vectors-negative300.bin)
//   WORDALIGN_WMT15_DATA   one or more ':'-separated judged TSV files
// are set.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wordalign/assignment.hpp"
#include "wordalign/batch.hpp"
#include "wordalign/correlation.hpp"
#include "wordalign/dataset_io.hpp"
#include "wordalign/embedding_store.hpp"
#include "wordalign/similarity_metrics.hpp"

using namespace wordalign;

namespace {

enum class Outcome { pass, fail, skip };

struct Verdict {
  Outcome outcome;
  std::string detail;
};

Verdict pass(std::string detail) { return {Outcome::pass, std::move(detail)}; }
Verdict fail(std::string detail) { return {Outcome::fail, std::move(detail)}; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MetricConfig config_for(Metric metric, double threshold) {
  MetricConfig config;
  config.metric = metric;
  config.threshold = threshold;
  return config;
}

// 1. assignment vs exhaustive search
Verdict assignment_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int mismatches = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    oracle::Grid grid(rows, std::vector<double>(cols));
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = grid[i][j] = unit(rng);
    const double diff =
        std::abs(solve_max_assignment(m).total_weight - oracle::brute_force_max_assignment(grid));
    worst = std::max(worst, diff);
    if (diff > 1e-9) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  const std::string detail = fmt::format("1000 matrices, max |diff| = {:.2e}, {} mismatches, {:.2f} s",
                                         worst, mismatches, elapsed);
  return mismatches == 0 && elapsed < 10.0 ? pass(detail) : fail(detail);
}

// 2. HAS vs enumeration of injective alignments
Verdict has_oracle() {
  std::mt19937_64 rng(1002);
  auto [table, vectors] = fixtures::random_table(rng, 10, 6);
  std::uniform_real_distribution<double> theta(0.0, 0.5);
  int mismatches = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = fixtures::random_indices(rng, 10, 0, 6);
    const auto y = fixtures::random_indices(rng, 10, 0, 6);
    const double th = trial % 2 == 0 ? 0.0 : theta(rng);
    const double got = score_has(fixtures::seg_from_indices(x), fixtures::seg_from_indices(y),
                                 table, config_for(Metric::has, th));
    const double diff = std::abs(got - oracle::brute_force_has(x, y, vectors, th));
    worst = std::max(worst, diff);
    if (diff > 1e-9) ++mismatches;
  }
  const std::string detail =
      fmt::format("200 pairs, max |diff| = {:.2e}, {} mismatches", worst, mismatches);
  return mismatches == 0 ? pass(detail) : fail(detail);
}

// 3. symmetry, ordering, range and threshold monotonicity
Verdict metric_properties() {
  std::mt19937_64 rng(1003);
  auto [table, vectors] = fixtures::random_table(rng, 20, 10);
  int symmetry = 0, ordering = 0, range = 0, monotone = 0;
  for (int trial = 0; trial < 500; ++trial) {
    // indices past the table are OOV tokens
    const Segment x = fixtures::seg_from_indices(fixtures::random_indices(rng, 24, 0, 10));
    const Segment y = fixtures::seg_from_indices(fixtures::random_indices(rng, 24, 0, 10));
    std::vector<double> previous(3, std::numeric_limits<double>::infinity());
    for (int k = 0; k <= 9; ++k) {
      const double th = k / 10.0;
      std::vector<double> now;
      for (Metric metric : {Metric::aas, Metric::mas, Metric::has}) {
        const double xy = score(x, y, table, config_for(metric, th));
        const double yx = score(y, x, table, config_for(metric, th));
        if (xy != yx) ++symmetry;
        if (!(xy >= 0.0 && xy <= 1.0)) ++range;
        now.push_back(xy);
      }
      if (!(now[0] <= now[1])) ++ordering;
      for (int m = 0; m < 3; ++m) {
        if (now[m] > previous[m]) ++monotone;
        previous[m] = now[m];
      }
    }
  }
  const std::string detail =
      fmt::format("500 pairs x 10 thresholds: symmetry {}, AAS<=MAS {}, range {}, monotone {} "
                  "violations",
                  symmetry, ordering, range, monotone);
  return symmetry + ordering + range + monotone == 0 ? pass(detail) : fail(detail);
}

// 4. hand-computed 2-D fixture
Verdict hand_fixture() {
  const EmbeddingTable t = fixtures::abc_table();
  const Segment x = fixtures::seg({"a", "c"});
  const Segment y = fixtures::seg({"a", "b"});
  struct Case {
    const char* name;
    double got, expected;
  };
  const Case cases[] = {
      {"AAS(0)", score_aas(x, y, t, config_for(Metric::aas, 0.0)), 0.60355},
      {"MAS(0)", score_mas(x, y, t, config_for(Metric::mas, 0.0)), 0.85355},
      {"HAS(0)", score_has(x, y, t, config_for(Metric::has, 0.0)), 0.85355},
      {"AAS(0.8)", score_aas(x, y, t, config_for(Metric::aas, 0.8)), 0.25},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    ok = ok && std::abs(c.got - c.expected) <= 1e-5;
    detail += fmt::format("{}={:.5f} ", c.name, c.got);
  }
  return ok ? pass(detail) : fail(detail);
}

// 5. Kendall's tau-b vs pair counting
Verdict kendall() {
  std::mt19937_64 rng(1005);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  std::uniform_int_distribution<int> levels(2, 10);
  int compared = 0, undefined = 0, mismatches = 0;
  while (compared < 1000) {
    const std::size_t n = size(rng);
    std::vector<double> h(n), m(n);
    std::uniform_int_distribution<int> hl(0, levels(rng)), ml(0, levels(rng));
    for (auto& v : h) v = hl(rng);
    for (auto& v : m) v = ml(rng) * 0.1;
    const auto c = oracle::count_pairs(h, m);
    const auto untied = c.concordant + c.discordant;
    if (untied + c.tied_h == 0 || untied + c.tied_m == 0) {
      bool threw = false;
      try {
        kendall_tau_b(h, m);
      } catch (const UndefinedCorrelation&) {
        threw = true;
      }
      if (!threw) ++mismatches;
      ++undefined;
      continue;
    }
    ++compared;
    if (kendall_tau_b(h, m) != oracle::kendall_tau_b(h, m)) ++mismatches;
  }
  using V = std::vector<double>;
  const double perfect = kendall_tau_b(V{1, 2, 3, 4}, V{1, 2, 3, 4});
  const double reversed = kendall_tau_b(V{1, 2, 3, 4}, V{4, 3, 2, 1});
  const double swapped = kendall_tau_b(V{1, 2, 3, 4}, V{1, 3, 2, 4});
  const bool examples = std::abs(perfect - 1.0) <= 1e-9 && std::abs(reversed + 1.0) <= 1e-9 &&
                        std::abs(swapped - 4.0 / 6.0) <= 1e-9;
  const std::string detail =
      fmt::format("{} oracle comparisons (+{} undefined inputs rejected), {} mismatches; "
                  "examples {:.4f} {:.4f} {:.4f}",
                  compared, undefined, mismatches, perfect, reversed, swapped);
  return mismatches == 0 && examples ? pass(detail) : fail(detail);
}

// 6. word2vec binary round trip and byte-exact dataset formats
Verdict formats() {
  std::mt19937_64 rng(1006);
  std::normal_distribution<float> normal;
  std::uniform_int_distribution<int> rows(1, 20), dims(1, 16);
  int bad_tables = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rows(rng), d = dims(rng);
    EmbeddingTable original(d);
    std::vector<std::vector<float>> source;
    for (int i = 0; i < n; ++i) {
      std::vector<float> f(d);
      for (auto& c : f) c = normal(rng) * std::ldexp(1.0f, static_cast<int>(rng() % 20) - 10);
      original.insert(fmt::format("t{}_{}", trial, i), std::vector<double>(f.begin(), f.end()));
      source.push_back(std::move(f));
    }
    std::stringstream buffer(std::ios::in | std::ios::out | std::ios::binary);
    write_binary_format(original, buffer);
    const EmbeddingTable loaded = load_binary_format(buffer);
    bool ok = loaded.size() == original.size() && loaded.dimension() == original.dimension();
    for (int i = 0; ok && i < n; ++i) {
      const auto v = lookup(loaded, original.token(i), false);
      if (!v) {
        ok = false;
        break;
      }
      for (int k = 0; k < d; ++k) {
        const float expected = source[i][k];
        const float got = static_cast<float>(v->components[k]);
        // within one float32 ulp
        if (got != expected && std::nextafter(expected, got) != got) ok = false;
      }
    }
    if (!ok) ++bad_tables;
  }

  std::vector<std::string> format_failures;
  const auto expect = [&](const std::string& name, const std::string& got,
                          const std::string& want) {
    if (got != want) format_failures.push_back(name);
  };
  {
    std::istringstream in("s1\tthe cat\tthe cat\t5");
    const EvaluationSet s = read_tsv(in);
    expect("read_tsv scored", s.items.size() == 1 && s.items[0].human_score == 5.0 ? "ok" : "",
           "ok");
  }
  {
    std::string message;
    try {
      std::istringstream in("s1\tonly two fields");
      read_tsv(in);
    } catch (const DatasetFormatError& e) {
      message = e.what();
    }
    expect("read_tsv column error", message.substr(0, 7), "line 1:");
  }
  {
    std::istringstream in("# comment\ns1\ta\tb");
    const EvaluationSet s = read_tsv(in);
    expect("read_tsv comment", s.items.size() == 1 && !s.items[0].human_score ? "ok" : "", "ok");
  }
  {
    EvaluationSet set;
    set.items.push_back({"s1", "h", "r", std::nullopt});
    std::ostringstream out, empty;
    write_scores(set, std::vector<double>{0.853553}, out);
    expect("write_scores", out.str(), "s1\t0.853553\n");
    write_scores(EvaluationSet{}, std::vector<double>{}, empty);
    expect("write_scores empty", empty.str(), "");
  }
  {
    std::ostringstream out, empty;
    write_sweep(std::vector<SweepRow>{{0.2, "MAS", 0.3731}, {0.0, "AAS", -0.0049}}, out);
    expect("write_sweep", out.str(), "threshold,metric,tau\n0.20,MAS,0.3731\n0.00,AAS,-0.0049\n");
    write_sweep(std::vector<SweepRow>{}, empty);
    expect("write_sweep empty", empty.str(), "threshold,metric,tau\n");
  }

  std::string detail = fmt::format("100 binary round trips, {} failed; {} format mismatches",
                                   bad_tables, format_failures.size());
  for (const auto& f : format_failures) detail += " [" + f + "]";
  return bad_tables == 0 && format_failures.empty() ? pass(detail) : fail(detail);
}

// 7. optional reproduction on user-supplied WMT15 data
Verdict wmt15_reproduction() {
  const char* embeddings = std::getenv("WORDALIGN_EMBEDDINGS");
  const char* datasets = std::getenv("WORDALIGN_WMT15_DATA");
  if (embeddings == nullptr || datasets == nullptr) {
    return {Outcome::skip,
            "set WORDALIGN_EMBEDDINGS and WORDALIGN_WMT15_DATA to run against WMT15 judgments"};
  }

  std::vector<EvaluationSet> sets;
  std::stringstream paths(datasets);
  for (std::string path; std::getline(paths, path, ':');) {
    if (path.empty()) continue;
    std::ifstream in(path);
    if (!in) return fail("cannot open " + path);
    sets.push_back(read_tsv(in, path));
  }
  if (sets.empty()) return fail("WORDALIGN_WMT15_DATA names no files");

  Vocabulary vocabulary;
  for (const auto& set : sets) vocabulary.merge(collect_vocabulary(set, TokenizerPolicy::punct, false));
  const EmbeddingTable table =
      load_embeddings(embeddings, EmbeddingFormat::automatic, LoadOptions{&vocabulary});

  const std::vector<Metric> metrics{Metric::aas, Metric::mas, Metric::has};
  std::vector<double> grid;
  for (int i = 0; i <= 9; ++i) grid.push_back(i / 10.0);

  // tau averaged over the language-pair files, per metric and threshold
  std::vector<std::vector<double>> mean_tau(metrics.size(), std::vector<double>(grid.size()));
  for (const auto& set : sets) {
    if (!set.fully_judged()) return fail(set.name + " has items without human scores");
    std::vector<double> human;
    for (const auto& item : set.items) human.push_back(*item.human_score);
    const PreparedDataset data = prepare_dataset(set, table, TokenizerPolicy::punct, false);
    const auto scores =
        score_dataset_grid(data, table, OovPolicy::surface_match, metrics, grid, 0);
    for (std::size_t m = 0; m < metrics.size(); ++m)
      for (std::size_t t = 0; t < grid.size(); ++t)
        mean_tau[m][t] += kendall_tau_b(human, scores[m][t]) / static_cast<double>(sets.size());
  }

  std::vector<double> best(metrics.size());
  std::vector<double> best_threshold(metrics.size());
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    const auto it = std::max_element(mean_tau[m].begin(), mean_tau[m].end());
    best[m] = *it;
    best_threshold[m] = grid[static_cast<std::size_t>(it - mean_tau[m].begin())];
  }
  const bool ordering = best[1] > best[0] && best[0] > best[2];
  const bool mas_peak = std::abs(best_threshold[1] - 0.2) <= 0.1 + 1e-12;
  const std::string detail = fmt::format(
      "best tau AAS {:.3f}@{:.1f}, MAS {:.3f}@{:.1f}, HAS {:.3f}@{:.1f}; ordering MAS>AAS>HAS "
      "{}, MAS peak near 0.2 {}",
      best[0], best_threshold[0], best[1], best_threshold[1], best[2], best_threshold[2],
      ordering ? "yes" : "no", mas_peak ? "yes" : "no");
  return ordering && mas_peak ? pass(detail) : fail(detail);
}

// 8. throughput of MAS at realistic sizes
Verdict performance() {
  std::mt19937_64 rng(1008);
  constexpr std::size_t kVocab = 5000, kDim = 300, kPairs = 10000;
  EmbeddingTable table(kDim);
  std::normal_distribution<double> normal;
  std::vector<double> v(kDim);
  for (std::size_t i = 0; i < kVocab; ++i) {
    for (double& c : v) c = normal(rng);
    table.insert("w" + std::to_string(i), v);
  }
  std::uniform_int_distribution<std::size_t> word(0, kVocab - 1);
  std::uniform_int_distribution<int> length(16, 24);
  EvaluationSet set;
  for (std::size_t i = 0; i < kPairs; ++i) {
    EvaluationItem item;
    item.segment_id = std::to_string(i);
    for (int k = length(rng); k > 0; --k) item.hypothesis += "w" + std::to_string(word(rng)) + " ";
    for (int k = length(rng); k > 0; --k) item.reference += "w" + std::to_string(word(rng)) + " ";
    set.items.push_back(std::move(item));
  }

  const auto start = std::chrono::steady_clock::now();
  const PreparedDataset data = prepare_dataset(set, table, TokenizerPolicy::whitespace, false);
  const auto scores = score_dataset(data, table, config_for(Metric::mas, 0.2), 1);
  const double elapsed = seconds_since(start);
  const std::string detail =
      fmt::format("{} MAS pairs (~20 tokens, {}-d) in {:.2f} s single-threaded", scores.size(),
                  kDim, elapsed);
  return elapsed < 60.0 && scores.size() == kPairs ? pass(detail) : fail(detail);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 assignment oracle equivalence", assignment_oracle},
      {"2 HAS oracle equivalence", has_oracle},
      {"3 metric properties", metric_properties},
      {"4 hand-computed fixture", hand_fixture},
      {"5 Kendall tau-b", kendall},
      {"6 format fidelity", formats},
      {"7 WMT15 reproduction (optional)", wmt15_reproduction},
      {"8 MAS performance", performance},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict verdict;
    try {
      verdict = check();
    } catch (const std::exception& e) {
      verdict = fail(std::string("exception: ") + e.what());
    }
    const char* tag = verdict.outcome == Outcome::pass   ? "PASS"
                      : verdict.outcome == Outcome::skip ? "SKIP"
                                                         : "FAIL";
    if (verdict.outcome == Outcome::fail) ++failures;
    std::cout << fmt::format("[{}] {}: {}", tag, name, verdict.detail) << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : fmt::format("{} criteria failed", failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
