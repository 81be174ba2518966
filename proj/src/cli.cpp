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

#include "wordalign/cli.hpp"

#include <chrono>
#include <fstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "wordalign/batch.hpp"
#include "wordalign/correlation.hpp"
#include "wordalign/dataset_io.hpp"

namespace wordalign::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string lower_name(Metric metric) { return ascii_lowercase(to_string(metric)); }

struct Loaded {
  EvaluationSet set;
  EmbeddingTable table;
  PreparedDataset data;
};

Loaded load_inputs(const RunOptions& options, std::ostream& err) {
  std::ifstream in(options.dataset);
  if (!in) throw std::runtime_error(fmt::format("cannot open dataset '{}'", options.dataset.string()));
  EvaluationSet set = read_tsv(in, options.dataset.stem().string());

  Vocabulary vocabulary;
  LoadOptions load;
  if (!options.full_vocabulary) {
    vocabulary = collect_vocabulary(set, options.tokenizer, options.lowercase_fallback);
    load.restrict_to = &vocabulary;
  }
  EmbeddingTable table = load_embeddings(options.embeddings, options.format, load);
  if (table.duplicates() > 0) {
    err << fmt::format("warning: {} duplicate embedding tokens ignored (first kept)\n",
                       table.duplicates());
  }
  PreparedDataset data =
      prepare_dataset(set, table, options.tokenizer, options.lowercase_fallback);
  return Loaded{std::move(set), std::move(table), std::move(data)};
}

std::vector<double> human_scores(const EvaluationSet& set) {
  std::vector<double> human;
  human.reserve(set.items.size());
  for (const auto& item : set.items) {
    if (!item.human_score) {
      throw std::runtime_error(
          fmt::format("segment '{}' has no human score; evaluation needs all of them",
                      item.segment_id));
    }
    human.push_back(*item.human_score);
  }
  return human;
}

// Writes through `write` to the output file if given, else to `out`.
template <typename Write>
void emit(const std::optional<std::filesystem::path>& output, std::ostream& out, Write write) {
  if (!output) {
    write(out);
    return;
  }
  std::ofstream file(*output, std::ios::binary);
  if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", output->string()));
  write(file);
  if (!file) throw std::runtime_error(fmt::format("failed writing '{}'", output->string()));
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RunReport base_report(std::string command, const Loaded& loaded) {
  RunReport report;
  report.command = std::move(command);
  report.dataset = loaded.set.name;
  report.items = loaded.set.items.size();
  report.tokens = loaded.data.token_count;
  report.oov_tokens = loaded.data.oov_count;
  return report;
}

template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kRuntimeError;
}

}  // namespace

std::string RunReport::to_string() const {
  std::string line = fmt::format("[{}] dataset={} metric={}", command, dataset, metric);
  if (threshold) line += fmt::format(" threshold={}", *threshold);
  line += fmt::format(" items={} tokens={} oov={} elapsed={:.3f}s", items, tokens, oov_tokens,
                      elapsed_seconds);
  if (tau) line += fmt::format(" tau={:.4f}", *tau);
  return line;
}

std::vector<double> default_threshold_grid() {
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

int cmd_score(const RunOptions& options, Metric metric, double threshold,
              const std::optional<std::filesystem::path>& output, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    const MetricConfig config{metric, threshold, options.oov, options.lowercase_fallback};
    config.validate();
    const Loaded loaded = load_inputs(options, err);
    const std::vector<double> scores =
        score_dataset(loaded.data, loaded.table, config, options.threads);
    emit(output, out, [&](std::ostream& sink) { write_scores(loaded.set, scores, sink); });

    RunReport report = base_report("score", loaded);
    report.metric = lower_name(metric);
    report.threshold = threshold;
    report.elapsed_seconds = seconds_since(start);
    if (loaded.set.items.empty()) err << "warning: dataset has no items\n";
    err << report.to_string() << '\n';
    return kSuccess;
  });
}

int cmd_evaluate(const RunOptions& options, Metric metric, double threshold, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    const MetricConfig config{metric, threshold, options.oov, options.lowercase_fallback};
    config.validate();
    const Loaded loaded = load_inputs(options, err);
    const std::vector<double> human = human_scores(loaded.set);
    const std::vector<double> scores =
        score_dataset(loaded.data, loaded.table, config, options.threads);
    const double tau = kendall_tau_b(human, scores);

    out << fmt::format("metric={} threshold={} tau={:.4f} n={}\n", lower_name(metric), threshold,
                       tau, scores.size());

    RunReport report = base_report("evaluate", loaded);
    report.metric = lower_name(metric);
    report.threshold = threshold;
    report.tau = tau;
    report.elapsed_seconds = seconds_since(start);
    err << report.to_string() << '\n';
    return kSuccess;
  });
}

int cmd_sweep(const RunOptions& options, const std::vector<Metric>& metrics,
              const std::vector<double>& grid,
              const std::optional<std::filesystem::path>& output, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto start = Clock::now();
    if (metrics.empty()) throw std::invalid_argument("sweep needs at least one metric");
    if (grid.empty()) throw std::invalid_argument("sweep needs at least one threshold");
    const Loaded loaded = load_inputs(options, err);
    const std::vector<double> human = human_scores(loaded.set);
    const auto scores =
        score_dataset_grid(loaded.data, loaded.table, options.oov, metrics, grid, options.threads);

    std::vector<SweepRow> rows;
    std::vector<std::string> summaries;
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      std::optional<SweepRow> best;
      for (std::size_t t = 0; t < grid.size(); ++t) {
        SweepRow row{grid[t], std::string(to_string(metrics[m])),
                     kendall_tau_b(human, scores[m][t])};
        if (!best || row.tau > best->tau) best = row;
        rows.push_back(std::move(row));
      }
      summaries.push_back(
          fmt::format("{} best threshold={:.2f} tau={:.4f}", best->metric, best->threshold,
                      best->tau));
    }
    emit(output, out, [&](std::ostream& sink) { write_sweep(rows, sink); });

    RunReport report = base_report("sweep", loaded);
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      report.metric += (m ? "," : "") + lower_name(metrics[m]);
    }
    report.elapsed_seconds = seconds_since(start);
    err << report.to_string() << '\n';
    for (const auto& s : summaries) err << s << '\n';
    return kSuccess;
  });
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word-alignment sentence similarity (AAS/MAS/HAS) for MT evaluation",
               "wordalign"};
  app.require_subcommand(1);

  RunOptions options;
  std::string format = "auto";
  std::string tokenizer = "punct";
  std::string oov = "surface";
  std::string metric = "mas";
  double threshold = 0.0;
  std::vector<std::string> metric_list{"aas", "mas", "has"};
  std::vector<double> grid = default_threshold_grid();
  std::string output;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--emb", options.embeddings, "word2vec embeddings file")
        ->required();
    sub->add_option("--data", options.dataset, "dataset TSV: id, hypothesis, reference[, human]")
        ->required();
    sub->add_option("--format", format, "embedding file format")
        ->check(CLI::IsMember({"bin", "text", "auto"}))
        ->capture_default_str();
    sub->add_option("--tokenizer", tokenizer, "tokenization policy")
        ->check(CLI::IsMember({"whitespace", "punct"}))
        ->capture_default_str();
    sub->add_option("--oov", oov, "similarity rule for out-of-vocabulary tokens")
        ->check(CLI::IsMember({"surface", "zero"}))
        ->capture_default_str();
    sub->add_flag("--lowercase-fallback", options.lowercase_fallback,
                  "retry lookups with the lowercased token");
    sub->add_flag("--full-vocab", options.full_vocabulary,
                  "load every embedding, not just the dataset vocabulary");
    sub->add_option("--threads", options.threads, "worker threads (0 = all cores)")
        ->capture_default_str();
  };
  const auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", metric, "aas, mas or has")
        ->check(CLI::IsMember({"aas", "mas", "has"}))
        ->capture_default_str();
    sub->add_option("--threshold", threshold, "similarity cutoff in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  };

  CLI::App* score = app.add_subcommand("score", "write per-segment scores");
  add_common(score);
  add_metric(score);
  score->add_option("--out", output, "score TSV (default: standard output)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Kendall's tau-b against human scores");
  add_common(evaluate);
  add_metric(evaluate);

  CLI::App* sweep = app.add_subcommand("sweep", "tau over a threshold grid");
  add_common(sweep);
  sweep->add_option("--metrics", metric_list, "comma-separated metrics")
      ->delimiter(',')
      ->check(CLI::IsMember({"aas", "mas", "has"}))
      ->capture_default_str();
  sweep->add_option("--grid", grid, "comma-separated thresholds")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sweep->add_option("--out", output, "sweep CSV (default: standard output)");

  std::vector<const char*> argv{"wordalign"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  options.format = parse_embedding_format(format);
  options.tokenizer = parse_tokenizer_policy(tokenizer);
  options.oov = parse_oov_policy(oov);
  const std::optional<std::filesystem::path> out_path =
      output.empty() ? std::nullopt : std::optional<std::filesystem::path>(output);

  if (score->parsed()) {
    return cmd_score(options, parse_metric(metric), threshold, out_path, out, err);
  }
  if (evaluate->parsed()) {
    return cmd_evaluate(options, parse_metric(metric), threshold, out, err);
  }
  std::vector<Metric> metrics;
  for (const auto& name : metric_list) metrics.push_back(parse_metric(name));
  return cmd_sweep(options, metrics, grid, out_path, out, err);
}

}  // namespace wordalign::cli
