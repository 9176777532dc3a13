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

#include "markeval/experiments.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "markeval/baselines.h"
#include "markeval/error.h"
#include "markeval/estimators.h"
#include "markeval/geometry.h"

namespace markeval {
namespace {

// Stream identifiers under a replicate seed.
constexpr std::uint64_t kReferenceStream = 0;
constexpr std::uint64_t kEvaluationStream = 1;
constexpr std::uint64_t kNoiseStream = 2;
constexpr std::uint64_t kAxisStreamBase = 100;

std::vector<double> draw_point(const MixtureMode& mode, std::size_t dim,
                               Rng& rng) {
  std::vector<double> x(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    x[c] = mode.mean[c] + mode.stddev * rng.normal();
  }
  return x;
}

void check_options(const ExperimentOptions& options) {
  if (options.k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  }
  if (options.repeats < 1) {
    throw Error(ErrorCode::kInvalidArgument, "repeats must be >= 1");
  }
  if (options.metrics.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no metrics selected");
  }
}

// Sums per-replicate metric values per axis point and turns them into means.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(std::size_t axis_points)
      : axis_points_(axis_points) {}

  void add(std::size_t axis_index,
           const std::vector<std::pair<std::string, double>>& values) {
    for (const auto& [name, value] : values) {
      auto it = std::find_if(series_.begin(), series_.end(),
                             [&](const auto& s) { return s.first == name; });
      if (it == series_.end()) {
        series_.emplace_back(name, std::vector<double>(axis_points_, 0.0));
        it = series_.end() - 1;
      }
      it->second[axis_index] += value;
    }
  }

  std::vector<std::pair<std::string, std::vector<double>>> means(
      std::size_t repeats) && {
    for (auto& [name, values] : series_) {
      for (double& v : values) v /= static_cast<double>(repeats);
    }
    return std::move(series_);
  }

 private:
  std::size_t axis_points_;
  std::vector<std::pair<std::string, std::vector<double>>> series_;
};

MixtureSpec with_seed(const MixtureSpec& spec, std::uint64_t seed) {
  MixtureSpec copy = spec;
  copy.seed = seed;
  return copy;
}

std::vector<std::pair<std::string, double>> mixture_config(
    const MixtureSpec& base, const ExperimentOptions& options) {
  return {
      {"k", static_cast<double>(options.k)},
      {"repeats", static_cast<double>(options.repeats)},
      {"modes", static_cast<double>(base.modes.size())},
      {"dim", static_cast<double>(base.dim)},
      {"samples_per_mode", static_cast<double>(base.samples_per_mode)},
      {"reference_size",
       static_cast<double>(base.samples_per_mode * base.modes.size())},
      {"evaluation_size",
       static_cast<double>(base.samples_per_mode * base.modes.size())},
  };
}

}  // namespace

void validate(const MixtureSpec& spec) {
  if (spec.modes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mixture needs at least 1 mode");
  }
  if (spec.dim < 1) {
    throw Error(ErrorCode::kInvalidArgument, "mixture dimension must be >= 1");
  }
  if (spec.samples_per_mode < 1) {
    throw Error(ErrorCode::kInvalidArgument, "samples_per_mode must be >= 1");
  }
  for (std::size_t m = 0; m < spec.modes.size(); ++m) {
    const auto& mode = spec.modes[m];
    if (!(mode.stddev > 0.0) || !std::isfinite(mode.stddev)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mode " + std::to_string(m) + " has non-positive stddev");
    }
    if (mode.mean.size() != spec.dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "mode " + std::to_string(m) + " mean has " +
                      std::to_string(mode.mean.size()) + " entries, expected " +
                      std::to_string(spec.dim));
    }
  }
}

MixtureSpec separated_mixture(std::size_t modes, std::size_t dim,
                              double separation, double stddev,
                              std::size_t samples_per_mode,
                              std::uint64_t seed) {
  if (dim < 1) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  }
  MixtureSpec spec;
  spec.seed = seed;
  spec.dim = dim;
  spec.samples_per_mode = samples_per_mode;
  for (std::size_t j = 0; j < modes; ++j) {
    MixtureMode mode;
    mode.mean.assign(dim, 0.0);
    const double level = static_cast<double>(j / dim);
    mode.mean[j % dim] = separation * (level + 1.0 / std::sqrt(2.0));
    mode.stddev = stddev;
    spec.modes.push_back(std::move(mode));
  }
  validate(spec);
  return spec;
}

Mixture gen_mixture(const MixtureSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  std::vector<double> values;
  values.reserve(spec.modes.size() * spec.samples_per_mode * spec.dim);
  std::vector<std::size_t> mode_of;
  mode_of.reserve(spec.modes.size() * spec.samples_per_mode);
  for (std::size_t m = 0; m < spec.modes.size(); ++m) {
    for (std::size_t i = 0; i < spec.samples_per_mode; ++i) {
      const auto x = draw_point(spec.modes[m], spec.dim, rng);
      values.insert(values.end(), x.begin(), x.end());
      mode_of.push_back(m);
    }
  }
  return Mixture{EmbeddingSet(std::move(values), spec.dim, "mixture"),
                 std::move(mode_of)};
}

Mixture sample_modes(const MixtureSpec& spec, std::span<const std::size_t> modes,
                     std::size_t count, Rng& rng) {
  validate(spec);
  if (modes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no modes to sample from");
  }
  for (std::size_t m : modes) {
    if (m >= spec.modes.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mode index " + std::to_string(m) + " out of range");
    }
  }
  std::vector<std::size_t> mode_of(count);
  for (auto& m : mode_of) m = modes[rng.below(modes.size())];
  std::sort(mode_of.begin(), mode_of.end());
  std::vector<double> values;
  values.reserve(count * spec.dim);
  for (std::size_t m : mode_of) {
    const auto x = draw_point(spec.modes[m], spec.dim, rng);
    values.insert(values.end(), x.begin(), x.end());
  }
  return Mixture{EmbeddingSet(std::move(values), spec.dim, "mixture"),
                 std::move(mode_of)};
}

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kPetersen: return "petersen";
    case Metric::kSchnabel: return "schnabel";
    case Metric::kCapture: return "capture";
    case Metric::kImpar: return "impar";
    case Metric::kFid: return "fid";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  for (Metric m : all_metrics()) {
    if (metric_name(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown metric '" + std::string(name) +
                  "' (expected petersen, schnabel, capture, impar or fid)");
}

std::vector<Metric> all_metrics() {
  return {Metric::kPetersen, Metric::kSchnabel, Metric::kCapture,
          Metric::kImpar, Metric::kFid};
}

const std::vector<double>& ExperimentReport::at(
    std::string_view series_name) const {
  for (const auto& [name, values] : series) {
    if (name == series_name) return values;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "report has no series '" + std::string(series_name) + "'");
}

std::vector<std::pair<std::string, double>> evaluate_metrics(
    const EmbeddingSet& reference, const EmbeddingSet& evaluation, int k,
    std::span<const Metric> metrics) {
  const bool needs_geometry =
      std::any_of(metrics.begin(), metrics.end(),
                  [](Metric m) { return m != Metric::kFid; });
  std::optional<PairGeometry> pair;
  if (needs_geometry) pair = build_pair_geometry(reference, evaluation, k);

  std::vector<std::pair<std::string, double>> out;
  for (Metric m : metrics) {
    switch (m) {
      case Metric::kPetersen:
        out.emplace_back("petersen", petersen_estimate(*pair).score);
        break;
      case Metric::kSchnabel: {
        const auto qd = me_quality_diversity(*pair);
        out.emplace_back("schnabel_quality", qd.quality);
        out.emplace_back("schnabel_diversity", qd.diversity);
        break;
      }
      case Metric::kCapture:
        out.emplace_back("capture", capture_estimate(*pair).score);
        break;
      case Metric::kImpar: {
        const auto pr = impar(*pair);
        out.emplace_back("impar_precision", pr.precision);
        out.emplace_back("impar_recall", pr.recall);
        break;
      }
      case Metric::kFid:
        out.emplace_back("fid", fid(reference, evaluation));
        break;
    }
  }
  return out;
}

ExperimentReport mode_collapse_experiment(const MixtureSpec& base,
                                          const ExperimentOptions& options) {
  validate(base);
  check_options(options);
  const std::size_t modes = base.modes.size();
  if (modes < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "mode collapse needs at least 2 modes");
  }
  ExperimentReport report;
  report.name = "mode-collapse";
  report.axis_label = "dropped_modes";
  for (std::size_t j = 0; j < modes; ++j) {
    report.axis.push_back(static_cast<double>(j));
  }
  report.config = mixture_config(base, options);

  SeriesAccumulator acc(modes);
  for (std::size_t r = 0; r < options.repeats; ++r) {
    const std::uint64_t seed = derive_seed(base.seed, r);
    report.seeds.push_back(seed);
    const Mixture reference =
        gen_mixture(with_seed(base, derive_seed(seed, kReferenceStream)));
    const std::size_t n = reference.set.size();
    for (std::size_t dropped = 0; dropped < modes; ++dropped) {
      std::vector<std::size_t> surviving;
      for (std::size_t m = dropped; m < modes; ++m) surviving.push_back(m);
      Rng rng(derive_seed(seed, kAxisStreamBase + dropped));
      const Mixture evaluation = sample_modes(base, surviving, n, rng);
      acc.add(dropped, evaluate_metrics(reference.set, evaluation.set,
                                        options.k, options.metrics));
    }
  }
  report.series = std::move(acc).means(options.repeats);
  return report;
}

ExperimentReport noise_sweep_experiment(const MixtureSpec& base,
                                        std::span<const double> sigmas,
                                        const ExperimentOptions& options) {
  validate(base);
  check_options(options);
  if (sigmas.empty() || sigmas.front() != 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "sigmas must start at 0");
  }
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    if (!std::isfinite(sigmas[i]) || sigmas[i] < 0.0 ||
        (i > 0 && sigmas[i] < sigmas[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sigmas must be finite, non-negative and ascending");
    }
  }
  ExperimentReport report;
  report.name = "noise";
  report.axis_label = "sigma";
  report.axis.assign(sigmas.begin(), sigmas.end());
  report.config = mixture_config(base, options);

  SeriesAccumulator acc(sigmas.size());
  for (std::size_t r = 0; r < options.repeats; ++r) {
    const std::uint64_t seed = derive_seed(base.seed, r);
    report.seeds.push_back(seed);
    const Mixture reference =
        gen_mixture(with_seed(base, derive_seed(seed, kReferenceStream)));
    const Mixture clean =
        gen_mixture(with_seed(base, derive_seed(seed, kEvaluationStream)));
    Rng noise_rng(derive_seed(seed, kNoiseStream));
    std::vector<double> noise(clean.set.values().size());
    for (double& z : noise) z = noise_rng.normal();

    for (std::size_t a = 0; a < sigmas.size(); ++a) {
      std::vector<double> values = clean.set.values();
      for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] += sigmas[a] * noise[i];
      }
      const EmbeddingSet evaluation(std::move(values), base.dim, "noisy");
      acc.add(a, evaluate_metrics(reference.set, evaluation, options.k,
                                  options.metrics));
    }
  }
  report.series = std::move(acc).means(options.repeats);
  return report;
}

ExperimentReport k_sweep(const EmbeddingSet& first, const EmbeddingSet& second,
                         std::span<const int> k_values) {
  if (k_values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no k values given");
  }
  const int max_k = *std::max_element(k_values.begin(), k_values.end());
  const int min_k = *std::min_element(k_values.begin(), k_values.end());
  if (min_k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k values must be >= 1");
  }
  const PairIndex index(first, second, max_k);

  ExperimentReport report;
  report.name = "k-sweep";
  report.axis_label = "k";
  report.config = {{"first_size", static_cast<double>(first.size())},
                   {"second_size", static_cast<double>(second.size())},
                   {"dim", static_cast<double>(first.dim())},
                   {"k_max", static_cast<double>(max_k)}};
  const char* names[] = {"petersen_p_hat",  "schnabel_p_hat",
                         "schnabel_reverse_p_hat", "capture_p_hat",
                         "petersen",        "schnabel_quality",
                         "schnabel_diversity",     "capture"};
  for (const char* name : names) report.series.emplace_back(name, std::vector<double>{});

  for (int k : k_values) {
    report.axis.push_back(static_cast<double>(k));
    const PairGeometry pair = index.at(k);
    const Estimate petersen = petersen_estimate(pair);
    const Estimate schnabel = schnabel_estimate(pair);
    const Estimate schnabel_reverse = schnabel_estimate(pair.swapped());
    const Estimate capture = capture_estimate(pair);
    const double values[] = {
        petersen.estimated_population, schnabel.estimated_population,
        schnabel_reverse.estimated_population, capture.estimated_population,
        petersen.score, schnabel.score, schnabel_reverse.score, capture.score};
    for (std::size_t s = 0; s < report.series.size(); ++s) {
      report.series[s].second.push_back(values[s]);
    }
  }
  return report;
}

}  // namespace markeval
