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

#include "markeval/embedding_set.h"

#include <cmath>

#include "markeval/error.h"

namespace markeval {

EmbeddingSet::EmbeddingSet(std::vector<double> values, std::size_t dim,
                           std::string label)
    : values_(std::move(values)), dim_(dim), label_(std::move(label)) {
  if (dim_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be >= 1");
  }
  if (values_.size() % dim_ != 0) {
    throw Error(ErrorCode::kRaggedRows,
                "value count " + std::to_string(values_.size()) +
                    " is not a multiple of dimension " + std::to_string(dim_));
  }
  size_ = values_.size() / dim_;
  if (size_ < 2) {
    throw Error(ErrorCode::kMinSamples,
                "an embedding set needs at least 2 samples, got " +
                    std::to_string(size_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::kNonFinite,
                  "non-finite value at row " + std::to_string(i / dim_) +
                      ", column " + std::to_string(i % dim_));
    }
  }
}

EmbeddingSet EmbeddingSet::from_rows(
    const std::vector<std::vector<double>>& rows, std::string label) {
  if (rows.empty()) {
    throw Error(ErrorCode::kMinSamples, "no rows given");
  }
  const std::size_t dim = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw Error(ErrorCode::kRaggedRows,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " values, expected " +
                      std::to_string(dim));
    }
    values.insert(values.end(), rows[i].begin(), rows[i].end());
  }
  return EmbeddingSet(std::move(values), dim, std::move(label));
}

double distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace markeval
