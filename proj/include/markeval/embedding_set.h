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

#ifndef MARKEVAL_EMBEDDING_SET_H_
#define MARKEVAL_EMBEDDING_SET_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace markeval {

// An ordered collection of n real vectors of dimension d, stored row-major in
// double precision. Rows are addressed by their 0-based position.
//
// Construction validates the invariants: n >= 2, d >= 1, all rows the same
// width and every entry finite.
class EmbeddingSet {
 public:
  EmbeddingSet(std::vector<double> values, std::size_t dim,
               std::string label = {});

  static EmbeddingSet from_rows(const std::vector<std::vector<double>>& rows,
                                std::string label = {});

  std::size_t size() const noexcept { return size_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  const std::vector<double>& values() const noexcept { return values_; }

  friend bool operator==(const EmbeddingSet& a, const EmbeddingSet& b) {
    return a.dim_ == b.dim_ && a.values_ == b.values_;
  }

 private:
  std::vector<double> values_;
  std::size_t dim_ = 0;
  std::size_t size_ = 0;
  std::string label_;
};

// Euclidean distance. Every capture decision in the library goes through this
// one function so that equal inputs always produce bit-identical distances.
double distance(std::span<const double> a, std::span<const double> b);

}  // namespace markeval

#endif  // MARKEVAL_EMBEDDING_SET_H_
