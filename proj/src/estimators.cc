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

#include "markeval/estimators.h"

#include <cmath>
#include <limits>
#include <string>

#include "markeval/error.h"

namespace markeval {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::int64_t count_true(const std::vector<std::uint8_t>& flags) {
  std::int64_t n = 0;
  for (auto f : flags) n += f;
  return n;
}

std::int64_t sum(const std::vector<std::size_t>& values) {
  std::int64_t n = 0;
  for (auto v : values) n += static_cast<std::int64_t>(v);
  return n;
}

std::int64_t population(const PairGeometry& pair) {
  return static_cast<std::int64_t>(pair.first.size() + pair.second.size());
}

// C * M / R, or +inf when nothing was recaptured.
double ratio_estimate(std::int64_t captured, std::int64_t marked,
                      std::int64_t recaptured) {
  if (recaptured <= 0) return kInf;
  return static_cast<double>(captured * marked) /
         static_cast<double>(recaptured);
}

Estimate finish(EstimatorKind kind, std::int64_t p, double p_hat,
                EstimatorCounts counts) {
  Estimate e;
  e.estimator = kind;
  e.true_population = p;
  e.estimated_population = p_hat;
  e.accuracy_loss = accuracy_loss(p, p_hat);
  e.score = 1.0 - e.accuracy_loss;
  e.counts = std::move(counts);
  return e;
}

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

}  // namespace

std::string_view estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kPetersen: return "petersen";
    case EstimatorKind::kSchnabel: return "schnabel";
    case EstimatorKind::kCapture: return "capture";
  }
  return "unknown";
}

EstimatorKind parse_estimator(std::string_view name) {
  if (name == "petersen") return EstimatorKind::kPetersen;
  if (name == "schnabel") return EstimatorKind::kSchnabel;
  if (name == "capture") return EstimatorKind::kCapture;
  throw Error(ErrorCode::kUnknownEstimator,
              "unknown estimator '" + std::string(name) +
                  "' (expected petersen, schnabel or capture)");
}

double accuracy_loss(std::int64_t p, double p_hat) {
  if (p < 1) {
    throw Error(ErrorCode::kDomainError,
                "true population must be >= 1, got " + std::to_string(p));
  }
  if (!std::isfinite(p_hat)) return 1.0;
  const double relative =
      std::abs(p_hat - static_cast<double>(p)) / static_cast<double>(p);
  return std::min(relative, 1.0);
}

// ---------------------------------------------------------------------------
// Petersen

PetersenCounts petersen_counts(const PairGeometry& pair) {
  const std::int64_t sp_covered = count_true(pair.cross.second_covered);
  const std::int64_t s_covered = count_true(pair.cross.first_covered);
  PetersenCounts c;
  c.marked = static_cast<std::int64_t>(pair.first.size()) + sp_covered;
  c.captured = static_cast<std::int64_t>(pair.second.size()) + s_covered;
  c.recaptured = sp_covered + s_covered;
  return c;
}

PetersenCounts petersen_counts(const EmbeddingSet& s, const EmbeddingSet& sp,
                               int k) {
  return petersen_counts(build_pair_geometry(s, sp, k));
}

Estimate petersen_estimate(const PairGeometry& pair) {
  const PetersenCounts c = petersen_counts(pair);
  return finish(EstimatorKind::kPetersen, population(pair),
                ratio_estimate(c.captured, c.marked, c.recaptured), c);
}

Estimate petersen_estimate(const EmbeddingSet& s, const EmbeddingSet& sp,
                           int k) {
  return petersen_estimate(build_pair_geometry(s, sp, k));
}

// ---------------------------------------------------------------------------
// Schnabel

SchnabelCounts schnabel_counts(const PairGeometry& pair) {
  const auto& geom_sp = pair.second;
  const std::size_t n_s = pair.first.size();
  const std::size_t n_sp = geom_sp.size();
  const auto members = static_cast<std::int64_t>(geom_sp.k()) + 1;

  // Marked flags for S'. All of S is marked by the initial step.
  std::vector<std::uint8_t> marked = pair.cross.second_covered;
  std::int64_t marked_count =
      static_cast<std::int64_t>(n_s) + count_true(marked);

  SchnabelCounts out;
  out.initially_marked = marked_count;
  out.trace.reserve(n_sp);
  for (std::size_t i = 0; i < n_sp; ++i) {
    const auto s_inside =
        static_cast<std::int64_t>(pair.cross.second_ball_counts[i]);
    std::int64_t already = marked[i];
    for (std::size_t j : geom_sp.neighbors(i)) already += marked[j];

    SchnabelIteration it;
    it.iteration = i + 1;
    it.captures = members + s_inside;
    it.recaptures = s_inside + already;

    marked_count += members - already;
    marked[i] = 1;
    for (std::size_t j : geom_sp.neighbors(i)) marked[j] = 1;
    it.marked_after = marked_count;

    out.total_captured += it.captures;
    out.total_recaptured += it.recaptures;
    out.trace.push_back(it);
  }
  out.total_marked = marked_count;
  return out;
}

SchnabelCounts schnabel_counts(const EmbeddingSet& s, const EmbeddingSet& sp,
                               int k) {
  return schnabel_counts(build_pair_geometry(s, sp, k));
}

Estimate schnabel_estimate(const PairGeometry& pair) {
  SchnabelCounts c = schnabel_counts(pair);
  const double p_hat =
      ratio_estimate(c.total_captured, c.total_marked, c.total_recaptured);
  return finish(EstimatorKind::kSchnabel, population(pair), p_hat,
                std::move(c));
}

Estimate schnabel_estimate(const EmbeddingSet& s, const EmbeddingSet& sp,
                           int k) {
  return schnabel_estimate(build_pair_geometry(s, sp, k));
}

QualityDiversity me_quality_diversity(const PairGeometry& pair) {
  return QualityDiversity{schnabel_estimate(pair).score,
                          schnabel_estimate(pair.swapped()).score};
}

QualityDiversity me_quality_diversity(const EmbeddingSet& reference,
                                      const EmbeddingSet& evaluation, int k) {
  return me_quality_diversity(build_pair_geometry(reference, evaluation, k));
}

// ---------------------------------------------------------------------------
// CAPTURE

CaptureCounts capture_counts(const PairGeometry& pair) {
  const auto members = static_cast<std::int64_t>(pair.k()) + 1;
  const std::int64_t n = population(pair);
  CaptureCounts c;
  c.occasions = n;
  c.unique_marked = n;
  c.total_captures = sum(pair.cross.first_ball_counts) +
                     sum(pair.cross.second_ball_counts) + members * n;
  return c;
}

CaptureCounts capture_counts(const EmbeddingSet& s, const EmbeddingSet& sp,
                             int k) {
  return capture_counts(build_pair_geometry(s, sp, k));
}

double capture_loglik(std::int64_t p, const CaptureCounts& counts) {
  const std::int64_t m = counts.unique_marked;
  const std::int64_t c = counts.total_captures;
  if (p < m) {
    throw Error(ErrorCode::kDomainError,
                "population " + std::to_string(p) +
                    " is below the marked count " + std::to_string(m));
  }
  const std::int64_t tp = counts.occasions * p;
  if (tp < c) {
    throw Error(ErrorCode::kDomainError,
                "T*P = " + std::to_string(tp) +
                    " is below the capture total " + std::to_string(c));
  }
  const double falling = std::lgamma(static_cast<double>(p) + 1.0) -
                         std::lgamma(static_cast<double>(p - m) + 1.0);
  return falling + xlogx(static_cast<double>(c)) +
         xlogx(static_cast<double>(tp - c)) - xlogx(static_cast<double>(tp));
}

std::int64_t capture_search_bound(const CaptureCounts& counts) {
  return 10 * counts.occasions;
}

Estimate capture_estimate(const PairGeometry& pair) {
  const CaptureCounts c = capture_counts(pair);
  const std::int64_t upper = capture_search_bound(c);
  std::int64_t best_p = c.unique_marked;
  double best = capture_loglik(best_p, c);
  // Strict improvement keeps ties at the smaller population.
  for (std::int64_t p = best_p + 1; p <= upper; ++p) {
    const double ll = capture_loglik(p, c);
    if (ll > best) {
      best = ll;
      best_p = p;
    }
  }
  Estimate e = finish(EstimatorKind::kCapture, population(pair),
                      static_cast<double>(best_p), c);
  e.capture_search = CaptureSearch{upper, best_p == upper, best};
  return e;
}

Estimate capture_estimate(const EmbeddingSet& s, const EmbeddingSet& sp,
                          int k) {
  return capture_estimate(build_pair_geometry(s, sp, k));
}

// ---------------------------------------------------------------------------

Estimate me_score(EstimatorKind kind, const PairGeometry& pair) {
  switch (kind) {
    case EstimatorKind::kPetersen: return petersen_estimate(pair);
    case EstimatorKind::kSchnabel: return schnabel_estimate(pair);
    case EstimatorKind::kCapture: return capture_estimate(pair);
  }
  throw Error(ErrorCode::kUnknownEstimator, "unhandled estimator kind");
}

Estimate me_score(EstimatorKind kind, const EmbeddingSet& s,
                  const EmbeddingSet& sp, int k) {
  return me_score(kind, build_pair_geometry(s, sp, k));
}

Estimate me_score(std::string_view name, const EmbeddingSet& s,
                  const EmbeddingSet& sp, int k) {
  return me_score(parse_estimator(name), s, sp, k);
}

}  // namespace markeval
