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

#include "markeval/baselines.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "markeval/error.h"
#include "test_util.h"

namespace markeval {
namespace {

using testing::line;
using testing::random_points;
using testing::to_set;

TEST(ImparTest, Examples) {
  std::mt19937_64 gen(3);
  const EmbeddingSet s = to_set(random_points(gen, 12, 3));
  const PrecisionRecall same = impar(s, s, 1);
  EXPECT_EQ(same.precision, 1.0);
  EXPECT_EQ(same.recall, 1.0);

  const PrecisionRecall far = impar(line({0, 1}), line({10, 11}), 1);
  EXPECT_EQ(far.precision, 0.0);
  EXPECT_EQ(far.recall, 0.0);

  const PrecisionRecall overlap = impar(line({0, 1}), line({1, 10}), 1);
  EXPECT_EQ(overlap.precision, 0.5);
  EXPECT_EQ(overlap.recall, 1.0);
}

TEST(ImparTest, MonotoneInKAndMatchesOracle) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_points(gen, 6 + gen() % 20, 3);
    const auto b = random_points(gen, 6 + gen() % 20, 3, 0.7);
    PrecisionRecall prev{0.0, 0.0};
    for (int k = 1; k <= 5; ++k) {
      const PrecisionRecall pr = impar(to_set(a), to_set(b), k);
      EXPECT_GE(pr.precision, prev.precision);
      EXPECT_GE(pr.recall, prev.recall);
      const auto [p, r] = oracle::impar(a, b, k);
      EXPECT_EQ(pr.precision, p);
      EXPECT_EQ(pr.recall, r);
      prev = pr;
    }
  }
}

TEST(FitGaussianTest, HandMoments) {
  const GaussianFit two = fit_gaussian(line({-1, 1}));
  EXPECT_EQ(two.mean(0), 0.0);
  EXPECT_EQ(two.covariance(0, 0), 2.0);

  const GaussianFit flat =
      fit_gaussian(EmbeddingSet::from_rows({{2, 3}, {2, 3}, {2, 3}}));
  EXPECT_EQ(flat.covariance.norm(), 0.0);

  const oracle::Points pts{{0.3, -1.2}, {2.5, 0.4}, {-0.7, 1.9}};
  const GaussianFit fit = fit_gaussian(to_set(pts));
  const oracle::Moments m = oracle::moments(pts);
  for (int a = 0; a < 2; ++a) {
    EXPECT_NEAR(fit.mean(a), m.mean[a], 1e-14);
    for (int b = 0; b < 2; ++b) EXPECT_NEAR(fit.covariance(a, b), m.cov[a][b], 1e-14);
  }
}

TEST(FidTest, EqualSetsAreZero) {
  std::mt19937_64 gen(7);
  const EmbeddingSet s = to_set(random_points(gen, 40, 6));
  EXPECT_NEAR(fid(s, s), 0.0, 1e-8);
}

TEST(FidTest, OneDimensionalClosedForm) {
  const EmbeddingSet a = line({1, 2, 3, 6});
  const EmbeddingSet b = line({-4, 0, 2, 2, 5});
  const oracle::Moments ma = oracle::moments(testing::to_points(a));
  const oracle::Moments mb = oracle::moments(testing::to_points(b));
  const double dm = ma.mean[0] - mb.mean[0];
  const double ds = std::sqrt(ma.cov[0][0]) - std::sqrt(mb.cov[0][0]);
  EXPECT_NEAR(fid(a, b), dm * dm + ds * ds, 1e-10);
}

TEST(FidTest, DiagonalCovarianceSumsPerAxis) {
  // Axis-aligned crosses have diagonal sample covariance.
  const EmbeddingSet a =
      EmbeddingSet::from_rows({{1, 0}, {-1, 0}, {0, 2}, {0, -2}});
  const EmbeddingSet b =
      EmbeddingSet::from_rows({{5, 1}, {1, 1}, {3, 4}, {3, -2}});
  const double va0 = 2.0 / 3, va1 = 8.0 / 3, vb0 = 8.0 / 3, vb1 = 18.0 / 3;
  const double expected = 3 * 3 + 1 * 1 + std::pow(std::sqrt(va0) - std::sqrt(vb0), 2) +
                          std::pow(std::sqrt(va1) - std::sqrt(vb1), 2);
  EXPECT_NEAR(fid(a, b), expected, 1e-10);
}

TEST(FidTest, SymmetricNonNegativeAndMatchesOracle) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + gen() % 6;
    const auto a = random_points(gen, 2 * d + gen() % 30, d);
    const auto b = random_points(gen, 2 * d + gen() % 30, d, 0.5);
    const double ab = fid(to_set(a), to_set(b));
    EXPECT_GE(ab, 0.0);
    EXPECT_NEAR(ab, fid(to_set(b), to_set(a)), 1e-8);
    EXPECT_NEAR(ab, oracle::fid(a, b), 1e-8);
  }
}

TEST(FidTest, RankDeficientCovarianceStaysFinite) {
  // Fewer samples than dimensions: both covariances are singular and the
  // square-root spectrum carries rounding noise of order sqrt(eps).
  std::mt19937_64 gen(12);
  const auto a = random_points(gen, 3, 6);
  const auto b = random_points(gen, 4, 6, 1.0);
  const double ab = fid(to_set(a), to_set(b));
  EXPECT_TRUE(std::isfinite(ab));
  EXPECT_NEAR(ab, fid(to_set(b), to_set(a)), 1e-6);
  EXPECT_NEAR(ab, oracle::fid(a, b), 1e-6);
}

TEST(FidTest, DimensionMismatch) {
  try {
    fid(line({0, 1}), EmbeddingSet::from_rows({{0, 0}, {1, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

}  // namespace
}  // namespace markeval
