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

#include "markeval/correlation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "markeval/error.h"

namespace markeval {
namespace {

using Vec = std::vector<double>;

ErrorCode code_of(void (*fn)()) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIoError;
}

TEST(PearsonTest, Examples) {
  const Vec x{1, 2, 3};
  EXPECT_NEAR(pearson(x, Vec{1, 2, 3}), 1.0, 1e-15);
  EXPECT_NEAR(pearson(x, Vec{-1, -2, -3}), -1.0, 1e-15);
  // (x - mean) = (-1, 0, 1), (y - mean) = (-4/3, -1/3, 5/3).
  EXPECT_NEAR(pearson(x, Vec{1, 2, 4}), 3.0 / std::sqrt(2.0 * 14.0 / 3.0), 1e-14);
  EXPECT_NEAR(pearson(x, Vec{1, 2, 4}), 0.9820, 1e-4);
}

TEST(SpearmanTest, Examples) {
  EXPECT_EQ(spearman(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4}), 0.8);
  EXPECT_NEAR(spearman(Vec{1, 2, 3, 4}, Vec{1, 8, 27, 64}), 1.0, 1e-15);
  EXPECT_NEAR(spearman(Vec{1, 2, 3, 4}, Vec{4, 3, 2, 1}), -1.0, 1e-15);
}

TEST(SpearmanTest, AverageRanks) {
  const Vec ranks = average_ranks(Vec{10, 20, 10, 5});
  EXPECT_EQ(ranks, (Vec{2.5, 4, 2.5, 1}));
}

TEST(KendallTest, Examples) {
  EXPECT_EQ(kendall(Vec{1, 2, 3}, Vec{1, 3, 2}), 1.0 / 3.0);
  EXPECT_EQ(kendall(Vec{1, 2, 3}, Vec{5, 6, 7}), 1.0);
  EXPECT_EQ(kendall(Vec{1, 2, 3}, Vec{3, 2, 1}), -1.0);
  // tau-b with one tie in y: nc = 2, nd = 0, ties_y = 1 over 3 pairs.
  EXPECT_NEAR(kendall(Vec{1, 2, 3}, Vec{1, 1, 2}), 2.0 / std::sqrt(3.0 * 2.0), 1e-15);
}

TEST(CorrelationTest, AffineAndMonotoneInvariance) {
  const Vec x{0.3, -1.2, 2.2, 0.9, 1.7, -0.4};
  const Vec y{1.1, -0.5, 1.9, 0.1, 2.4, 0.0};
  Vec y_affine, y_cubed;
  for (double v : y) {
    y_affine.push_back(3.0 * v + 7.0);
    y_cubed.push_back(v * v * v);
  }
  EXPECT_NEAR(pearson(x, y), pearson(x, y_affine), 1e-12);
  EXPECT_EQ(spearman(x, y), spearman(x, y_cubed));
  EXPECT_EQ(kendall(x, y), kendall(x, y_cubed));
}

TEST(CorrelationTest, Errors) {
  EXPECT_EQ(code_of([] { pearson(Vec{1, 2, 3}, Vec{4, 4, 4}); }),
            ErrorCode::kDegenerateInput);
  EXPECT_EQ(code_of([] { kendall(Vec{1, 1, 1}, Vec{1, 2, 3}); }),
            ErrorCode::kDegenerateInput);
  EXPECT_EQ(code_of([] { spearman(Vec{1, 2}, Vec{1, 2}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { pearson(Vec{1, 2, 3}, Vec{1, 2}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { validate(ScoreSeries{{"a", "b"}, {1, 2, 3}, {1, 2, 3}}); }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace markeval
