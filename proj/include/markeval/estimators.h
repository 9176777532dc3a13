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

#ifndef MARKEVAL_ESTIMATORS_H_
#define MARKEVAL_ESTIMATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "markeval/embedding_set.h"
#include "markeval/geometry.h"

namespace markeval {

inline constexpr int kDefaultK = 1;

enum class EstimatorKind { kPetersen, kSchnabel, kCapture };

std::string_view estimator_name(EstimatorKind kind);
// Accepts "petersen", "schnabel" and "capture". Throws UnknownEstimator.
EstimatorKind parse_estimator(std::string_view name);

// Single mark / single recapture counts.
struct PetersenCounts {
  std::int64_t marked = 0;      // |S| + #{s' covered by S}
  std::int64_t captured = 0;    // |S'| + #{s covered by S'}
  std::int64_t recaptured = 0;  // #{s' covered by S} + #{s covered by S'}
};

// One recapture iteration, centered on s'_iteration.
struct SchnabelIteration {
  std::size_t iteration = 0;  // 1-based
  std::int64_t captures = 0;
  std::int64_t recaptures = 0;
  std::int64_t marked_after = 0;
};

struct SchnabelCounts {
  std::int64_t total_marked = 0;
  std::int64_t total_captured = 0;
  std::int64_t total_recaptured = 0;
  // Size of the marked set after the initial marking step.
  std::int64_t initially_marked = 0;
  std::vector<SchnabelIteration> trace;
};

struct CaptureCounts {
  std::int64_t occasions = 0;       // T = |S| + |S'|
  std::int64_t unique_marked = 0;   // M_T = |S| + |S'|
  std::int64_t total_captures = 0;  // C_total
};

// Outcome of the likelihood grid search behind the CAPTURE estimate.
struct CaptureSearch {
  std::int64_t upper_bound = 0;
  bool boundary_hit = false;
  double log_likelihood = 0.0;
};

using EstimatorCounts =
    std::variant<PetersenCounts, SchnabelCounts, CaptureCounts>;

struct Estimate {
  EstimatorKind estimator = EstimatorKind::kPetersen;
  std::int64_t true_population = 0;
  // +infinity when no sample was recaptured.
  double estimated_population = 0.0;
  double accuracy_loss = 0.0;
  double score = 0.0;
  EstimatorCounts counts;
  std::optional<CaptureSearch> capture_search;
};

struct QualityDiversity {
  double quality = 0.0;
  double diversity = 0.0;
};

// min(|p_hat - p| / p, 1); 1 for an infinite estimate. Throws DomainError if
// p < 1.
double accuracy_loss(std::int64_t p, double p_hat);

// All estimators read the pair as (S, S') = (pair.first, pair.second).
PetersenCounts petersen_counts(const PairGeometry& pair);
PetersenCounts petersen_counts(const EmbeddingSet& s, const EmbeddingSet& sp,
                               int k);
Estimate petersen_estimate(const PairGeometry& pair);
Estimate petersen_estimate(const EmbeddingSet& s, const EmbeddingSet& sp,
                           int k);

// Marks S and every s' covered by S, then walks S' in row order. Iteration i
// captures s'_i, its k neighbors and every s inside the hypersphere of s'_i;
// recaptures are those S captures plus the already-marked members of
// {s'_i} + neighbors(s'_i), which are marked afterwards.
SchnabelCounts schnabel_counts(const PairGeometry& pair);
SchnabelCounts schnabel_counts(const EmbeddingSet& s, const EmbeddingSet& sp,
                               int k);
Estimate schnabel_estimate(const PairGeometry& pair);
Estimate schnabel_estimate(const EmbeddingSet& s, const EmbeddingSet& sp,
                           int k);

// quality = Schnabel(reference, evaluation), diversity = Schnabel(evaluation,
// reference). `pair` is (reference, evaluation).
QualityDiversity me_quality_diversity(const PairGeometry& pair);
QualityDiversity me_quality_diversity(const EmbeddingSet& reference,
                                      const EmbeddingSet& evaluation, int k);

CaptureCounts capture_counts(const PairGeometry& pair);
CaptureCounts capture_counts(const EmbeddingSet& s, const EmbeddingSet& sp,
                             int k);

// Log-likelihood of population size p under the null CAPTURE model:
//   ln(p!/(p-M)!) + C ln C + (Tp - C) ln(Tp - C) - Tp ln(Tp)
// with x ln x taken as 0 at x = 0. Throws DomainError if p < M or Tp < C.
double capture_loglik(std::int64_t p, const CaptureCounts& counts);

// Upper end of the likelihood search: 10 * (|S| + |S'|).
std::int64_t capture_search_bound(const CaptureCounts& counts);

Estimate capture_estimate(const PairGeometry& pair);
Estimate capture_estimate(const EmbeddingSet& s, const EmbeddingSet& sp,
                          int k);

Estimate me_score(EstimatorKind kind, const PairGeometry& pair);
Estimate me_score(EstimatorKind kind, const EmbeddingSet& s,
                  const EmbeddingSet& sp, int k);
Estimate me_score(std::string_view name, const EmbeddingSet& s,
                  const EmbeddingSet& sp, int k);

}  // namespace markeval

#endif  // MARKEVAL_ESTIMATORS_H_
