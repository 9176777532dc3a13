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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "markeval/error.h"
#include "test_util.h"

namespace markeval {
namespace {

using testing::line;
using testing::random_points;
using testing::to_set;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Two well separated generic clusters of n samples each.
std::pair<EmbeddingSet, EmbeddingSet> far_clusters(std::size_t n, std::size_t d,
                                                   std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return {to_set(random_points(gen, n, d, 0.0)),
          to_set(random_points(gen, n, d, 1000.0))};
}

TEST(AccuracyLossTest, Examples) {
  EXPECT_EQ(accuracy_loss(20, 20.0), 0.0);
  EXPECT_EQ(accuracy_loss(20, 30.0), 0.5);
  EXPECT_EQ(accuracy_loss(20, 60.0), 1.0);
  EXPECT_EQ(accuracy_loss(20, kInf), 1.0);
  EXPECT_EQ(accuracy_loss(20, 10.0), 0.5);
  EXPECT_THROW(accuracy_loss(0, 1.0), Error);
}

TEST(PetersenTest, EqualSetsCountEverythingTwice) {
  std::mt19937_64 gen(1);
  const EmbeddingSet s = to_set(random_points(gen, 15, 3));
  const EmbeddingSet copy = s;
  for (int k : {1, 2, 5}) {
    const PetersenCounts c = petersen_counts(s, copy, k);
    EXPECT_EQ(c.marked, 30);
    EXPECT_EQ(c.captured, 30);
    EXPECT_EQ(c.recaptured, 30);
    const Estimate e = petersen_estimate(s, copy, k);
    EXPECT_EQ(e.estimated_population, 30.0);
    EXPECT_EQ(e.score, 1.0);
  }
}

TEST(PetersenTest, HandEnumeratedExamples) {
  const PetersenCounts disjoint = petersen_counts(line({0, 1}), line({10, 11}), 1);
  EXPECT_EQ(disjoint.marked, 2);
  EXPECT_EQ(disjoint.captured, 2);
  EXPECT_EQ(disjoint.recaptured, 0);
  const Estimate e0 = petersen_estimate(line({0, 1}), line({10, 11}), 1);
  EXPECT_EQ(e0.estimated_population, kInf);
  EXPECT_EQ(e0.score, 0.0);

  const PetersenCounts overlap = petersen_counts(line({0, 1}), line({1, 10}), 1);
  EXPECT_EQ(overlap.marked, 3);
  EXPECT_EQ(overlap.captured, 4);
  EXPECT_EQ(overlap.recaptured, 3);
  const Estimate e1 = petersen_estimate(line({0, 1}), line({1, 10}), 1);
  EXPECT_EQ(e1.estimated_population, 4.0);
  EXPECT_EQ(e1.true_population, 4);
  EXPECT_EQ(e1.score, 1.0);
}

TEST(SchnabelTest, OverlapTrace) {
  const SchnabelCounts c = schnabel_counts(line({0, 1}), line({1, 10}), 1);
  EXPECT_EQ(c.total_marked, 4);
  EXPECT_EQ(c.total_captured, 7);
  EXPECT_EQ(c.total_recaptured, 6);
  EXPECT_EQ(c.initially_marked, 3);
  ASSERT_EQ(c.trace.size(), 2u);
  EXPECT_EQ(c.trace[0].captures, 4);
  EXPECT_EQ(c.trace[0].recaptures, 3);
  EXPECT_EQ(c.trace[0].marked_after, 4);
  EXPECT_EQ(c.trace[1].captures, 3);
  EXPECT_EQ(c.trace[1].recaptures, 3);

  const Estimate e = schnabel_estimate(line({0, 1}), line({1, 10}), 1);
  EXPECT_DOUBLE_EQ(e.estimated_population, 28.0 / 6.0);
  EXPECT_NEAR(e.accuracy_loss, 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(e.score, 5.0 / 6.0, 1e-12);
}

TEST(SchnabelTest, DisjointTrace) {
  const SchnabelCounts c = schnabel_counts(line({0, 1}), line({10, 11}), 1);
  EXPECT_EQ(c.total_marked, 4);
  EXPECT_EQ(c.total_captured, 4);
  EXPECT_EQ(c.total_recaptured, 2);
  EXPECT_EQ(c.trace[0].recaptures, 0);
  EXPECT_EQ(c.trace[1].recaptures, 2);
  const Estimate e = schnabel_estimate(line({0, 1}), line({10, 11}), 1);
  EXPECT_EQ(e.estimated_population, 8.0);
  EXPECT_EQ(e.accuracy_loss, 1.0);
  EXPECT_EQ(e.score, 0.0);
}

TEST(SchnabelTest, EqualSets) {
  std::mt19937_64 gen(2);
  const EmbeddingSet s = to_set(random_points(gen, 12, 4));
  for (int k : {1, 3}) {
    const SchnabelCounts c = schnabel_counts(s, s, k);
    EXPECT_EQ(c.total_marked, 24);
    EXPECT_EQ(c.total_captured, 24 * (k + 1));
    EXPECT_EQ(c.total_recaptured, 24 * (k + 1));
    EXPECT_EQ(schnabel_estimate(s, s, k).score, 1.0);
  }
}

TEST(SchnabelTest, TraceInvariantsAndOrderEffect) {
  std::mt19937_64 gen(4);
  const auto s_pts = random_points(gen, 20, 2);
  auto sp_pts = random_points(gen, 25, 2, 0.5);
  const EmbeddingSet s = to_set(s_pts);
  const SchnabelCounts base = schnabel_counts(s, to_set(sp_pts), 2);
  std::int64_t prev = base.initially_marked;
  for (const auto& it : base.trace) {
    EXPECT_GE(it.marked_after, prev);
    prev = it.marked_after;
  }
  EXPECT_EQ(prev, base.total_marked);
  EXPECT_EQ(base.total_marked, 45);

  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(sp_pts.begin(), sp_pts.end(), gen);
    const SchnabelCounts permuted = schnabel_counts(s, to_set(sp_pts), 2);
    EXPECT_EQ(permuted.total_marked, base.total_marked);
    EXPECT_EQ(permuted.total_captured, base.total_captured);
  }
}

TEST(QualityDiversityTest, Examples) {
  std::mt19937_64 gen(6);
  const EmbeddingSet s = to_set(random_points(gen, 10, 3));
  const QualityDiversity same = me_quality_diversity(s, s, 1);
  EXPECT_EQ(same.quality, 1.0);
  EXPECT_EQ(same.diversity, 1.0);

  const QualityDiversity disjoint = me_quality_diversity(line({0, 1}), line({10, 11}), 1);
  EXPECT_EQ(disjoint.quality, 0.0);
  EXPECT_EQ(disjoint.diversity, 0.0);

  const EmbeddingSet a = line({0, 1, 2.5, 4});
  const EmbeddingSet b = line({1, 10, 3, 7.5});
  const QualityDiversity ab = me_quality_diversity(a, b, 1);
  const QualityDiversity ba = me_quality_diversity(b, a, 1);
  EXPECT_EQ(ab.quality, ba.diversity);
  EXPECT_EQ(ab.diversity, ba.quality);
}

TEST(CaptureTest, CountsExamples) {
  std::mt19937_64 gen(8);
  const EmbeddingSet s = to_set(random_points(gen, 10, 3));
  const CaptureCounts eq = capture_counts(s, s, 1);
  EXPECT_EQ(eq.occasions, 20);
  EXPECT_EQ(eq.unique_marked, 20);
  EXPECT_EQ(eq.total_captures, 80);

  const auto [a, b] = far_clusters(10, 3, 9);
  EXPECT_EQ(capture_counts(a, b, 1).total_captures, 40);

  // k = n - 1: every hypersphere spans its whole set.
  EXPECT_EQ(capture_counts(s, s, 9).total_captures, 20 * 20);
}

TEST(CaptureTest, LogLikelihoodAnchors) {
  const CaptureCounts eq{20, 20, 80};
  EXPECT_NEAR(capture_loglik(20, eq), -157.82535295452135, 1e-9);
  EXPECT_NEAR(capture_loglik(21, eq), -159.12319907665596, 1e-9);
  EXPECT_NEAR(capture_loglik(20, eq), oracle::capture_loglik(20, 20, 20, 80), 1e-9);

  // P == M: the falling factorial is M!.
  const CaptureCounts c{7, 5, 12};
  EXPECT_NEAR(capture_loglik(5, c),
              std::lgamma(6.0) + 12 * std::log(12.0) + 23 * std::log(23.0) -
                  35 * std::log(35.0),
              1e-9);

  const CaptureCounts disjoint{20, 20, 40};
  EXPECT_NEAR(capture_loglik(24, disjoint), -86.07459629919276, 1e-9);
  for (std::int64_t p = 20; p <= 400; ++p) {
    if (p != 24) EXPECT_LT(capture_loglik(p, disjoint), capture_loglik(24, disjoint));
  }
}

TEST(CaptureTest, LogLikelihoodDomain) {
  const CaptureCounts c{20, 20, 80};
  try {
    capture_loglik(19, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainError);
  }
  // T*P == C: the (x ln x) term vanishes.
  const CaptureCounts full{4, 4, 16};
  EXPECT_NEAR(capture_loglik(4, full),
              std::lgamma(5.0) + 16 * std::log(16.0) - 16 * std::log(16.0), 1e-12);
}

TEST(CaptureTest, EstimateExamples) {
  std::mt19937_64 gen(10);
  const EmbeddingSet s = to_set(random_points(gen, 10, 3));
  const Estimate eq = capture_estimate(s, s, 1);
  EXPECT_EQ(eq.estimated_population, 20.0);
  EXPECT_EQ(eq.score, 1.0);
  ASSERT_TRUE(eq.capture_search.has_value());
  EXPECT_EQ(eq.capture_search->upper_bound, 200);
  EXPECT_FALSE(eq.capture_search->boundary_hit);

  const auto [a, b] = far_clusters(10, 3, 12);
  const Estimate far = capture_estimate(a, b, 1);
  EXPECT_EQ(far.estimated_population, 24.0);
  EXPECT_NEAR(far.accuracy_loss, 0.2, 1e-15);
  EXPECT_NEAR(far.score, 0.8, 1e-15);
  const Estimate swapped = capture_estimate(b, a, 1);
  EXPECT_EQ(swapped.estimated_population, far.estimated_population);
  EXPECT_EQ(swapped.score, far.score);
}

TEST(MeScoreTest, Dispatch) {
  std::mt19937_64 gen(13);
  const EmbeddingSet s = to_set(random_points(gen, 10, 2));
  EXPECT_EQ(me_score("petersen", s, s, 1).score, 1.0);
  EXPECT_NEAR(me_score("schnabel", line({0, 1}), line({1, 10}), 1).score, 5.0 / 6.0, 1e-12);
  const auto [a, b] = far_clusters(10, 2, 14);
  EXPECT_NEAR(me_score("capture", a, b, 1).score, 0.8, 1e-15);
  try {
    me_score("schumacher", s, s, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownEstimator);
  }
}

TEST(EstimatorErrorTest, Propagated) {
  EXPECT_THROW(petersen_estimate(line({0, 1}), line({0, 1}), 2), Error);
  const EmbeddingSet two_d = EmbeddingSet::from_rows({{0, 0}, {1, 1}});
  try {
    schnabel_estimate(line({0, 1}), two_d, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(EstimatorPropertyTest, RangeSymmetryAndOracle) {
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n1 = 3 + gen() % 30;
    const std::size_t n2 = 3 + gen() % 30;
    const std::size_t d = 1 + gen() % 5;
    const int k = 1 + static_cast<int>(gen() % std::min<std::size_t>(std::min(n1, n2) - 1, 4));
    auto p1 = random_points(gen, n1, d);
    auto p2 = random_points(gen, n2, d, static_cast<double>(gen() % 3));
    if (trial % 7 == 0) p2[0] = p1[0];  // shared sample
    if (trial % 5 == 0) p1[1] = p1[0];  // duplicate inside one set
    const EmbeddingSet a = to_set(p1), b = to_set(p2);

    const auto expected = oracle::counts(p1, p2, k);
    const PetersenCounts pc = petersen_counts(a, b, k);
    EXPECT_EQ(pc.marked, expected.petersen_m);
    EXPECT_EQ(pc.captured, expected.petersen_c);
    EXPECT_EQ(pc.recaptured, expected.petersen_r);
    const SchnabelCounts sc = schnabel_counts(a, b, k);
    EXPECT_EQ(sc.total_marked, expected.schnabel_m);
    EXPECT_EQ(sc.total_captured, expected.schnabel_c);
    EXPECT_EQ(sc.total_recaptured, expected.schnabel_r);
    const CaptureCounts cc = capture_counts(a, b, k);
    EXPECT_EQ(cc.total_captures, expected.capture_c_total);
    EXPECT_GE(cc.total_captures, (k + 1) * static_cast<std::int64_t>(n1 + n2));

    const Estimate cap = capture_estimate(a, b, k);
    EXPECT_EQ(cap.estimated_population,
              static_cast<double>(oracle::capture_argmax(
                  cc.unique_marked, cc.occasions, cc.total_captures,
                  10 * cc.occasions)));

    for (EstimatorKind kind : {EstimatorKind::kPetersen, EstimatorKind::kSchnabel,
                               EstimatorKind::kCapture}) {
      const Estimate e = me_score(kind, a, b, k);
      EXPECT_GE(e.score, 0.0);
      EXPECT_LE(e.score, 1.0);
      EXPECT_EQ(e.score, 1.0 - e.accuracy_loss);
      EXPECT_EQ(e.true_population, static_cast<std::int64_t>(n1 + n2));
      if (kind != EstimatorKind::kSchnabel) {
        const Estimate r = me_score(kind, b, a, k);
        EXPECT_EQ(r.estimated_population, e.estimated_population);
        EXPECT_EQ(r.score, e.score);
      }
    }
  }
}

}  // namespace
}  // namespace markeval
