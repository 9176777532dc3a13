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

#ifndef MARKEVAL_EXPERIMENTS_H_
#define MARKEVAL_EXPERIMENTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "markeval/embedding_set.h"
#include "markeval/random.h"

namespace markeval {

struct MixtureMode {
  std::vector<double> mean;
  double stddev = 1.0;  // isotropic
};

struct MixtureSpec {
  std::uint64_t seed = 0;
  std::vector<MixtureMode> modes;
  std::size_t samples_per_mode = 0;
  std::size_t dim = 0;
};

// Throws InvalidArgument unless there is at least one mode, every stddev is
// positive and every mean has `dim` entries.
void validate(const MixtureSpec& spec);

// Modes on the coordinate axes, mode j at distance
// separation * (j / dim + 1/sqrt(2)) from the origin along axis j % dim, so
// every pair of means is at least `separation` apart.
MixtureSpec separated_mixture(std::size_t modes, std::size_t dim,
                              double separation, double stddev,
                              std::size_t samples_per_mode, std::uint64_t seed);

struct Mixture {
  EmbeddingSet set;
  std::vector<std::size_t> mode_of;  // per row
};

// samples_per_mode draws from each mode, rows grouped by mode in mode order.
// Deterministic for a fixed spec.seed.
Mixture gen_mixture(const MixtureSpec& spec);

// `count` draws whose mode is picked uniformly, with replacement, from
// `modes`; rows are grouped by mode in ascending mode order.
Mixture sample_modes(const MixtureSpec& spec, std::span<const std::size_t> modes,
                     std::size_t count, Rng& rng);

enum class Metric { kPetersen, kSchnabel, kCapture, kImpar, kFid };

std::string_view metric_name(Metric metric);
Metric parse_metric(std::string_view name);  // InvalidArgument if unknown
std::vector<Metric> all_metrics();

struct ExperimentReport {
  std::string name;
  std::string axis_label;
  std::vector<double> axis;
  // Metric series in insertion order, one value per axis point.
  std::vector<std::pair<std::string, std::vector<double>>> series;
  std::vector<std::uint64_t> seeds;
  std::vector<std::pair<std::string, double>> config;

  // Throws InvalidArgument if the series does not exist.
  const std::vector<double>& at(std::string_view series_name) const;
};

struct ExperimentOptions {
  int k = 1;
  std::vector<Metric> metrics = all_metrics();
  // Independent replicates; series hold the mean over replicates.
  std::size_t repeats = 1;
};

// Scores `evaluation` against `reference` for each metric. Series names:
// petersen, schnabel_quality, schnabel_diversity, capture, impar_precision,
// impar_recall, fid.
std::vector<std::pair<std::string, double>> evaluate_metrics(
    const EmbeddingSet& reference, const EmbeddingSet& evaluation, int k,
    std::span<const Metric> metrics);

// Axis: number of dropped modes, 0 .. modes-1. The reference is the full
// mixture; the evaluation set has the same size but only draws from the
// modes that survive (the first `dropped` modes are removed).
ExperimentReport mode_collapse_experiment(const MixtureSpec& base,
                                          const ExperimentOptions& options);

// Axis: absolute noise stddev. The evaluation set is an independent draw
// from the mixture plus sigma * Z, with one fixed noise field Z per replicate
// so that every axis point perturbs the same samples in the same directions.
// sigmas must be ascending, non-negative and start at 0.
ExperimentReport noise_sweep_experiment(const MixtureSpec& base,
                                        std::span<const double> sigmas,
                                        const ExperimentOptions& options);

// Per k: estimated population of every estimator and every ME score.
// Series: petersen_p_hat, schnabel_p_hat, schnabel_reverse_p_hat,
// capture_p_hat, petersen, schnabel_quality, schnabel_diversity, capture.
ExperimentReport k_sweep(const EmbeddingSet& first, const EmbeddingSet& second,
                         std::span<const int> k_values);

}  // namespace markeval

#endif  // MARKEVAL_EXPERIMENTS_H_
