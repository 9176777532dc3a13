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

#include "markeval/geometry.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "markeval/error.h"
#include "test_util.h"

namespace markeval {
namespace {

using testing::line;

TEST(BuildGeometryTest, OneDimensionalRadii) {
  const EmbeddingSet set = line({0, 1, 3});
  const CaptureGeometry g = build_geometry(set, 1);
  EXPECT_EQ(g.radii(), (std::vector<double>{1, 1, 2}));
  EXPECT_EQ(g.neighbors(0)[0], 1u);
  EXPECT_EQ(g.neighbors(1)[0], 0u);
  EXPECT_EQ(g.neighbors(2)[0], 1u);
}

TEST(BuildGeometryTest, TiesBrokenByIndex) {
  const EmbeddingSet set = line({0, -1, 1});
  const CaptureGeometry g = build_geometry(set, 1);
  EXPECT_EQ(g.neighbors(0)[0], 1u);
  const CaptureGeometry g2 = build_geometry(set, 2);
  EXPECT_EQ(g2.neighbors(0)[0], 1u);
  EXPECT_EQ(g2.neighbors(0)[1], 2u);
}

TEST(BuildGeometryTest, FullNeighborhoodRadiusIsFarthestSample) {
  std::mt19937_64 gen(7);
  const auto pts = testing::random_points(gen, 9, 3);
  const EmbeddingSet set = testing::to_set(pts);
  const CaptureGeometry g = build_geometry(set, 8);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double farthest = 0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) farthest = std::max(farthest, oracle::dist(pts[i], pts[j]));
    }
    EXPECT_EQ(g.radius(i), farthest);
  }
}

TEST(BuildGeometryTest, DuplicatesGiveZeroRadius) {
  const EmbeddingSet set = EmbeddingSet::from_rows({{2, 2}, {2, 2}, {5, 6}});
  const CaptureGeometry g = build_geometry(set, 1);
  EXPECT_EQ(g.radius(0), 0.0);
  EXPECT_EQ(g.radius(1), 0.0);
  EXPECT_EQ(g.radius(2), 5.0);
}

TEST(BuildGeometryTest, RejectsTooFewSamples) {
  const EmbeddingSet set = line({0, 1, 3});
  try {
    build_geometry(set, 3);
    FAIL() << "expected MinSamples";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMinSamples);
  }
  EXPECT_THROW(build_geometry(set, 0), Error);
}

TEST(BuildGeometryTest, InvariantsHold) {
  std::mt19937_64 gen(11);
  const EmbeddingSet set = testing::to_set(testing::random_points(gen, 40, 4));
  for (int k : {1, 3, 10}) {
    const CaptureGeometry g = build_geometry(set, k);
    for (std::size_t i = 0; i < set.size(); ++i) {
      const auto nb = g.neighbors(i);
      ASSERT_EQ(nb.size(), static_cast<std::size_t>(k));
      for (std::size_t j : nb) EXPECT_NE(j, i);
      EXPECT_EQ(g.radius(i), distance(set.row(i), set.row(nb.back())));
      for (std::size_t r = 1; r < nb.size(); ++r) {
        EXPECT_LE(distance(set.row(i), set.row(nb[r - 1])),
                  distance(set.row(i), set.row(nb[r])));
      }
    }
  }
}

TEST(NonFiniteTest, RejectedAtConstruction) {
  try {
    EmbeddingSet({0.0, 1.0, std::nan(""), 2.0}, 2);
    FAIL() << "expected NonFinite";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFinite);
  }
}

TEST(CaptureByTest, Examples) {
  const EmbeddingSet set = line({0, 1, 3});
  const CaptureGeometry g = build_geometry(set, 1);
  const std::vector<double> two{2.0};
  EXPECT_TRUE(capture_by(two, 2, g));   // |2-3| = 1 <= 2
  EXPECT_FALSE(capture_by(two, 0, g));  // 2 > 1
  const std::vector<double> center{3.0};
  EXPECT_TRUE(capture_by(center, 2, g));
  const std::vector<double> boundary{1.0};  // exactly radius 1 from 0
  EXPECT_TRUE(capture_by(boundary, 0, g));
}

TEST(CaptureByTest, DimensionMismatch) {
  const EmbeddingSet set = line({0, 1, 3});
  const CaptureGeometry g = build_geometry(set, 1);
  const std::vector<double> x{1.0, 2.0};
  try {
    capture_by(x, 0, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  EXPECT_THROW(covered(x, g), Error);
}

TEST(CoveredTest, Examples) {
  const EmbeddingSet set = line({0, 1, 3});
  const CaptureGeometry g = build_geometry(set, 1);
  EXPECT_TRUE(covered(std::vector<double>{5.0}, g));
  EXPECT_FALSE(covered(std::vector<double>{6.0}, g));
  for (std::size_t i = 0; i < set.size(); ++i) EXPECT_TRUE(covered(set.row(i), g));
  EXPECT_FALSE(covered(std::vector<double>{100.0}, g));
}

TEST(CountCoveredTest, Examples) {
  const EmbeddingSet s = line({0, 1});
  const EmbeddingSet sp = line({1, 10});
  EXPECT_EQ(count_covered(sp, build_geometry(s, 1)), 1u);
  EXPECT_EQ(count_covered(s, build_geometry(sp, 1)), 2u);
  EXPECT_EQ(count_covered(line({100, 101}), build_geometry(s, 1)), 0u);
}

TEST(GeometryPropertyTest, SelfCoverageAndMonotonicity) {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + gen() % 30;
    const std::size_t d = 1 + gen() % 6;
    const EmbeddingSet a = testing::to_set(testing::random_points(gen, n, d));
    const auto probes = testing::random_points(gen, 30, d);
    std::vector<bool> prev(probes.size(), false);
    for (int k = 1; k < static_cast<int>(n); ++k) {
      const CaptureGeometry g = build_geometry(a, k);
      EXPECT_EQ(count_covered(a, g), n);
      for (std::size_t p = 0; p < probes.size(); ++p) {
        const bool now = covered(probes[p], g);
        if (prev[p]) EXPECT_TRUE(now) << "coverage lost when k grew to " << k;
        prev[p] = now;
      }
      if (k > 1) {
        const CaptureGeometry smaller = build_geometry(a, k - 1);
        for (std::size_t i = 0; i < n; ++i) {
          EXPECT_LE(smaller.radius(i), g.radius(i));
        }
      }
    }
  }
}

TEST(GeometryPropertyTest, MatchesNaiveOracle) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + gen() % 62;
    const std::size_t d = 1 + gen() % 8;
    const int k = 1 + static_cast<int>(gen() % std::min<std::size_t>(n - 1, 6));
    const auto pts = testing::random_points(gen, n, d);
    const EmbeddingSet set = testing::to_set(pts);
    const CaptureGeometry g = build_geometry(set, k);
    const auto r = oracle::radii(pts, k);
    EXPECT_EQ(g.radii(), r);
    const auto probes = testing::random_points(gen, 20, d);
    for (const auto& x : probes) {
      EXPECT_EQ(covered(x, g), oracle::f(x, pts, r));
      for (std::size_t c = 0; c < n; ++c) {
        EXPECT_EQ(capture_by(x, c, g), oracle::dist(x, pts[c]) <= r[c]);
      }
    }
  }
}

TEST(GeometryPropertyTest, DeterministicAcrossThreadCounts) {
  std::mt19937_64 gen(5);
  const EmbeddingSet set = testing::to_set(testing::random_points(gen, 300, 5));
  setenv("ME_THREADS", "1", 1);
  const CaptureGeometry one = build_geometry(set, 4);
  setenv("ME_THREADS", "4", 1);
  const CaptureGeometry four = build_geometry(set, 4);
  unsetenv("ME_THREADS");
  EXPECT_EQ(one.radii(), four.radii());
  for (std::size_t i = 0; i < set.size(); ++i) {
    EXPECT_TRUE(std::equal(one.neighbors(i).begin(), one.neighbors(i).end(),
                           four.neighbors(i).begin()));
  }
}

TEST(PairIndexTest, SlicesMatchDirectBuild) {
  std::mt19937_64 gen(3);
  const EmbeddingSet a = testing::to_set(testing::random_points(gen, 25, 3));
  const EmbeddingSet b = testing::to_set(testing::random_points(gen, 30, 3));
  const PairIndex index(a, b, 10);
  for (int k : {1, 4, 10}) {
    const PairGeometry sliced = index.at(k);
    const PairGeometry direct = build_pair_geometry(a, b, k);
    EXPECT_EQ(sliced.first.radii(), direct.first.radii());
    EXPECT_EQ(sliced.second.radii(), direct.second.radii());
    EXPECT_EQ(sliced.cross.first_ball_counts, direct.cross.first_ball_counts);
    EXPECT_EQ(sliced.cross.second_covered, direct.cross.second_covered);
  }
}

}  // namespace
}  // namespace markeval
