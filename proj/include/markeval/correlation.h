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

#ifndef MARKEVAL_CORRELATION_H_
#define MARKEVAL_CORRELATION_H_

#include <span>
#include <string>
#include <vector>

namespace markeval {

// All three require equal lengths >= 3 (InvalidArgument otherwise) and throw
// DegenerateInput when a coefficient is undefined.

double pearson(std::span<const double> x, std::span<const double> y);

// Pearson on ranks; tied values share their average rank.
double spearman(std::span<const double> x, std::span<const double> y);

// Kendall tau-b: (concordant - discordant) / sqrt((n0 - n1)(n0 - n2)).
double kendall(std::span<const double> x, std::span<const double> y);

// Paired metric scores and external ratings over the same systems.
struct ScoreSeries {
  std::vector<std::string> labels;
  std::vector<double> scores;
  std::vector<double> ratings;
};

// Equal lengths >= 3 (labels may be empty); InvalidArgument otherwise.
void validate(const ScoreSeries& series);

// 1-based ranks with ties averaged.
std::vector<double> average_ranks(std::span<const double> x);

}  // namespace markeval

#endif  // MARKEVAL_CORRELATION_H_
