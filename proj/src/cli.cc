// Copyright 2026 The Markeval Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "markeval/cli.h"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "markeval/baselines.h"
#include "markeval/correlation.h"
#include "markeval/embedding_io.h"
#include "markeval/error.h"
#include "markeval/estimators.h"
#include "markeval/experiments.h"
#include "markeval/report.h"

namespace markeval {
namespace {

using nlohmann::ordered_json;

// Raised for argument combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string out_path;
  std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_path, "Write the report here instead of stdout");
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

void emit(const Report& report, const OutputOptions& opts, std::ostream& out) {
  const ReportFormat format = parse_report_format(opts.format);
  if (opts.out_path.empty()) {
    out << render(report, format);
  } else {
    write_report(report, opts.out_path, format);
  }
}

void check_same_dim(const EmbeddingSet& a, const EmbeddingSet& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "reference has dimension " + std::to_string(a.dim()) +
                    ", evaluation has " + std::to_string(b.dim()));
  }
}

// ---------------------------------------------------------------------------
// score

struct ScoreArgs {
  std::string reference;
  std::string evaluation;
  std::string metric = "all";
  int k = kDefaultK;
  OutputOptions output;
};

std::vector<Metric> selected_metrics(const std::string& metric) {
  if (metric == "all") return all_metrics();
  return {parse_metric(metric)};
}

Report run_score(const ScoreArgs& args) {
  const EmbeddingSet reference = read_embeddings(args.reference);
  const EmbeddingSet evaluation = read_embeddings(args.evaluation);
  check_same_dim(reference, evaluation);
  const auto metrics = selected_metrics(args.metric);

  Report report;
  report.config["command"] = "score";
  report.config["reference"] = args.reference;
  report.config["evaluation"] = args.evaluation;
  report.config["metric"] = args.metric;
  report.config["k"] = args.k;
  report.config["reference_size"] = reference.size();
  report.config["evaluation_size"] = evaluation.size();
  report.config["dim"] = reference.dim();

  std::optional<PairGeometry> pair;
  for (Metric m : metrics) {
    if (m != Metric::kFid && !pair) {
      pair = build_pair_geometry(reference, evaluation, args.k);
    }
    switch (m) {
      case Metric::kPetersen:
      case Metric::kCapture: {
        const Estimate e = me_score(
            m == Metric::kPetersen ? EstimatorKind::kPetersen
                                   : EstimatorKind::kCapture,
            *pair);
        const std::string name(metric_name(m));
        report.results[name] = to_json(e);
        report.rows.push_back({"", name, e.score});
        break;
      }
      case Metric::kSchnabel: {
        const Estimate quality = schnabel_estimate(*pair);
        const Estimate diversity = schnabel_estimate(pair->swapped());
        ordered_json j;
        j["quality"] = quality.score;
        j["diversity"] = diversity.score;
        j["quality_estimate"] = to_json(quality);
        j["diversity_estimate"] = to_json(diversity);
        report.results["schnabel"] = std::move(j);
        report.rows.push_back({"", "schnabel_quality", quality.score});
        report.rows.push_back({"", "schnabel_diversity", diversity.score});
        break;
      }
      case Metric::kImpar: {
        const PrecisionRecall pr = impar(*pair);
        report.results["impar"] = to_json(pr);
        report.rows.push_back({"", "impar_precision", pr.precision});
        report.rows.push_back({"", "impar_recall", pr.recall});
        break;
      }
      case Metric::kFid: {
        const double distance = fid(reference, evaluation);
        report.results["fid"] = {{"distance", distance}};
        report.rows.push_back({"", "fid", distance});
        break;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// sweep-k

struct SweepArgs {
  std::string reference;
  std::string evaluation;
  int k_min = 1;
  int k_max = 0;
  OutputOptions output;
};

Report run_sweep(const SweepArgs& args) {
  if (args.k_min > args.k_max) throw UsageError("--k-min exceeds --k-max");
  const EmbeddingSet reference = read_embeddings(args.reference);
  const EmbeddingSet evaluation = read_embeddings(args.evaluation);
  check_same_dim(reference, evaluation);
  std::vector<int> ks;
  for (int k = args.k_min; k <= args.k_max; ++k) ks.push_back(k);
  Report report = make_report(k_sweep(reference, evaluation, ks));
  report.config["command"] = "sweep-k";
  report.config["reference"] = args.reference;
  report.config["evaluation"] = args.evaluation;
  report.config["k_min"] = args.k_min;
  return report;
}

// ---------------------------------------------------------------------------
// synthetic

struct SyntheticArgs {
  std::string experiment;
  std::size_t modes = 5;
  std::size_t n = 1000;
  std::size_t d = 8;
  std::uint64_t seed = 0;
  double separation = 10.0;
  double stddev = 1.0;
  int k = kDefaultK;
  std::size_t repeats = 1;
  std::vector<std::string> metrics{"all"};
  std::vector<double> sigmas{0.0, 0.5, 1.0, 2.0, 10.0};
  OutputOptions output;
};

Report run_synthetic(const SyntheticArgs& args) {
  if (args.modes < 1 || args.n % args.modes != 0) {
    throw UsageError("--n must be a positive multiple of --modes");
  }
  if (args.experiment == "mode-collapse" && args.modes < 2) {
    throw UsageError("mode-collapse needs --modes >= 2");
  }
  ExperimentOptions options;
  options.k = args.k;
  options.repeats = args.repeats;
  options.metrics.clear();
  for (const auto& m : args.metrics) {
    if (m == "all") {
      options.metrics = all_metrics();
      break;
    }
    try {
      options.metrics.push_back(parse_metric(m));
    } catch (const Error& e) {
      throw UsageError(e.message());
    }
  }
  const MixtureSpec spec = separated_mixture(args.modes, args.d, args.separation,
                                             args.stddev, args.n / args.modes,
                                             args.seed);
  ExperimentReport experiment;
  std::vector<double> sigmas;
  if (args.experiment == "mode-collapse") {
    experiment = mode_collapse_experiment(spec, options);
  } else {
    for (double s : args.sigmas) sigmas.push_back(s * args.stddev);
    experiment = noise_sweep_experiment(spec, sigmas, options);
  }
  experiment.config.emplace_back("separation", args.separation);
  experiment.config.emplace_back("stddev", args.stddev);
  Report report = make_report(experiment);
  report.config["command"] = "synthetic";
  report.config["seed"] = args.seed;
  if (!sigmas.empty()) report.config["sigma_multiples"] = args.sigmas;
  return report;
}

// ---------------------------------------------------------------------------
// correlate

struct CorrelateArgs {
  std::string scores;
  std::string ratings;
  std::string method = "all";
  OutputOptions output;
};

Report run_correlate(const CorrelateArgs& args) {
  const LabeledValues scores = read_labeled_values(args.scores);
  const LabeledValues ratings = read_labeled_values(args.ratings);
  ScoreSeries series{scores.labels, scores.values, ratings.values};
  if (scores.values.size() != ratings.values.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "scores have " + std::to_string(scores.values.size()) +
                    " entries, ratings have " +
                    std::to_string(ratings.values.size()));
  }
  for (std::size_t i = 0; i < scores.labels.size(); ++i) {
    if (!scores.labels[i].empty() && !ratings.labels[i].empty() &&
        scores.labels[i] != ratings.labels[i]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "label mismatch at entry " + std::to_string(i + 1) + ": '" +
                      scores.labels[i] + "' vs '" + ratings.labels[i] + "'");
    }
  }
  validate(series);

  Report report;
  report.config["command"] = "correlate";
  report.config["scores"] = args.scores;
  report.config["ratings"] = args.ratings;
  report.config["method"] = args.method;
  report.config["n"] = series.scores.size();
  const auto add = [&](const char* name, double value) {
    report.results[name] = value;
    report.rows.push_back({"", name, value});
  };
  const bool all = args.method == "all";
  if (all || args.method == "pearson") add("pearson", pearson(series.scores, series.ratings));
  if (all || args.method == "kendall") add("kendall", kendall(series.scores, series.ratings));
  if (all || args.method == "spearman") add("spearman", spearman(series.scores, series.ratings));
  return report;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Mark-recapture evaluation of embedding sets", "markeval"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score an evaluation set against a reference set");
  score_cmd->add_option("--reference", score.reference, "Reference embeddings (NPY or CSV)")->required();
  score_cmd->add_option("--evaluation", score.evaluation, "Evaluation embeddings (NPY or CSV)")->required();
  score_cmd->add_option("--metric", score.metric, "Metric to compute")
      ->check(CLI::IsMember({"petersen", "schnabel", "capture", "impar", "fid", "all"}))
      ->capture_default_str();
  score_cmd->add_option("--k", score.k, "Neighbors per hypersphere")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(score_cmd, score.output);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-k", "Estimates and scores for k = k-min..k-max");
  sweep_cmd->add_option("--reference", sweep.reference, "Reference embeddings")->required();
  sweep_cmd->add_option("--evaluation", sweep.evaluation, "Evaluation embeddings")->required();
  sweep_cmd->add_option("--k-max", sweep.k_max, "Largest k")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--k-min", sweep.k_min, "Smallest k")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(sweep_cmd, sweep.output);

  SyntheticArgs synth;
  auto* synth_cmd = app.add_subcommand("synthetic", "Seeded Gaussian-mixture experiments");
  synth_cmd->add_option("experiment", synth.experiment, "mode-collapse or noise")
      ->required()
      ->check(CLI::IsMember({"mode-collapse", "noise"}));
  synth_cmd->add_option("--modes", synth.modes, "Mixture modes")->capture_default_str();
  synth_cmd->add_option("--n", synth.n, "Samples per set")->capture_default_str();
  synth_cmd->add_option("--d", synth.d, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Master seed")->capture_default_str();
  synth_cmd->add_option("--separation", synth.separation, "Minimum distance between mode means")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--stddev", synth.stddev, "Per-mode isotropic stddev")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--k", synth.k, "Neighbors per hypersphere")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--repeats", synth.repeats, "Replicates averaged per axis point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_cmd->add_option("--metrics", synth.metrics, "Metrics (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"petersen", "schnabel", "capture", "impar", "fid", "all"}))
      ->capture_default_str();
  synth_cmd->add_option("--sigmas", synth.sigmas, "Noise levels as multiples of --stddev (noise only)")
      ->delimiter(',')
      ->capture_default_str();
  add_output_options(synth_cmd, synth.output);

  CorrelateArgs corr;
  auto* corr_cmd = app.add_subcommand("correlate", "Correlate metric scores with ratings");
  corr_cmd->add_option("--scores", corr.scores, "Scores, one 'value' or 'label,value' per line")->required();
  corr_cmd->add_option("--ratings", corr.ratings, "Ratings in the same layout")->required();
  corr_cmd->add_option("--method", corr.method, "Correlation coefficient")
      ->check(CLI::IsMember({"pearson", "kendall", "spearman", "all"}))
      ->capture_default_str();
  add_output_options(corr_cmd, corr.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*score_cmd) {
      emit(run_score(score), score.output, out);
    } else if (*sweep_cmd) {
      emit(run_sweep(sweep), sweep.output, out);
    } else if (*synth_cmd) {
      emit(run_synthetic(synth), synth.output, out);
    } else if (*corr_cmd) {
      emit(run_correlate(corr), corr.output, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace markeval
