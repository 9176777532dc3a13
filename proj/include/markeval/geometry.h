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

#ifndef MARKEVAL_GEOMETRY_H_
#define MARKEVAL_GEOMETRY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "markeval/embedding_set.h"

namespace markeval {

// k-nearest-neighbor structure of one set. For every sample i it stores the k
// closest other samples (ascending distance, ties by ascending index) and the
// hypersphere radius, i.e. the distance to the k-th of them.
//
// The geometry does not own its source set; the set must outlive it.
class CaptureGeometry {
 public:
  CaptureGeometry(const EmbeddingSet& source, int k,
                  std::vector<std::size_t> neighbors,
                  std::vector<double> radii);

  const EmbeddingSet& source() const noexcept { return *source_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return radii_.size(); }

  std::span<const std::size_t> neighbors(std::size_t i) const {
    return {neighbors_.data() + i * static_cast<std::size_t>(k_),
            static_cast<std::size_t>(k_)};
  }
  double radius(std::size_t i) const { return radii_[i]; }
  const std::vector<double>& radii() const noexcept { return radii_; }

 private:
  const EmbeddingSet* source_;
  int k_;
  std::vector<std::size_t> neighbors_;  // size() * k, row-major
  std::vector<double> radii_;
};

// Sorted neighbor lists truncated at max_k, from which the geometry for any
// k <= max_k can be sliced without recomputing distances.
class NeighborTable {
 public:
  NeighborTable(const EmbeddingSet& source, int max_k);

  int max_k() const noexcept { return max_k_; }
  CaptureGeometry geometry(int k) const;

 private:
  const EmbeddingSet* source_;
  int max_k_;
  std::vector<std::size_t> indices_;  // size * max_k
  std::vector<double> distances_;     // size * max_k
};

// Errors: MinSamples if set.size() <= k; InvalidArgument if k < 1.
CaptureGeometry build_geometry(const EmbeddingSet& set, int k);

// ||x - center|| <= radius(center). Inclusive boundary.
bool capture_by(std::span<const double> x, std::size_t center_index,
                const CaptureGeometry& geom);

// True iff x lies inside at least one hypersphere of the geometry.
bool covered(std::span<const double> x, const CaptureGeometry& geom);

std::size_t count_covered(const EmbeddingSet& xs, const CaptureGeometry& geom);

// Capture relations between the hyperspheres of two sets A and B.
struct CrossCapture {
  // Per a_i: number of B samples inside the hypersphere of a_i.
  std::vector<std::size_t> first_ball_counts;
  // Per b_j: number of A samples inside the hypersphere of b_j.
  std::vector<std::size_t> second_ball_counts;
  // Per a_i: 1 iff a_i lies inside at least one hypersphere of B.
  std::vector<std::uint8_t> first_covered;
  // Per b_j: 1 iff b_j lies inside at least one hypersphere of A.
  std::vector<std::uint8_t> second_covered;

  CrossCapture swapped() const;
};

CrossCapture cross_capture(const CaptureGeometry& a, const CaptureGeometry& b);

// Both geometries at a common k plus their cross relations.
struct PairGeometry {
  CaptureGeometry first;
  CaptureGeometry second;
  CrossCapture cross;

  int k() const noexcept { return first.k(); }
  PairGeometry swapped() const;
};

PairGeometry build_pair_geometry(const EmbeddingSet& first,
                                 const EmbeddingSet& second, int k);

// Reusable neighbor tables for a pair of sets, for sweeps over k.
class PairIndex {
 public:
  PairIndex(const EmbeddingSet& first, const EmbeddingSet& second, int max_k);

  int max_k() const noexcept { return first_.max_k(); }
  PairGeometry at(int k) const;

 private:
  NeighborTable first_;
  NeighborTable second_;
};

}  // namespace markeval

#endif  // MARKEVAL_GEOMETRY_H_
