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

#include <algorithm>
#include <string>
#include <utility>

#include "markeval/error.h"
#include "markeval/parallel.h"

namespace markeval {
namespace {

void check_k(const EmbeddingSet& set, int k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must be >= 1, got " + std::to_string(k));
  }
  if (set.size() <= static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kMinSamples,
                "k=" + std::to_string(k) + " needs more than " +
                    std::to_string(k) + " samples, set has " +
                    std::to_string(set.size()));
  }
}

void check_dim(std::size_t got, std::size_t want) {
  if (got != want) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension " + std::to_string(got) + " does not match " +
                    std::to_string(want));
  }
}

}  // namespace

CaptureGeometry::CaptureGeometry(const EmbeddingSet& source, int k,
                                 std::vector<std::size_t> neighbors,
                                 std::vector<double> radii)
    : source_(&source),
      k_(k),
      neighbors_(std::move(neighbors)),
      radii_(std::move(radii)) {}

NeighborTable::NeighborTable(const EmbeddingSet& source, int max_k)
    : source_(&source), max_k_(max_k) {
  check_k(source, max_k);
  const std::size_t n = source.size();
  const auto kk = static_cast<std::size_t>(max_k);
  indices_.resize(n * kk);
  distances_.resize(n * kk);

  parallel_for(n, [&](std::size_t i) {
    std::vector<std::pair<double, std::size_t>> row;
    row.reserve(n - 1);
    const auto xi = source.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row.emplace_back(distance(xi, source.row(j)), j);
    }
    // Lexicographic pair order gives ascending distance, ties by index.
    std::partial_sort(row.begin(), row.begin() + kk, row.end());
    for (std::size_t r = 0; r < kk; ++r) {
      distances_[i * kk + r] = row[r].first;
      indices_[i * kk + r] = row[r].second;
    }
  });
}

CaptureGeometry NeighborTable::geometry(int k) const {
  if (k < 1 || k > max_k_) {
    throw Error(ErrorCode::kInvalidArgument,
                "k=" + std::to_string(k) + " outside table range [1, " +
                    std::to_string(max_k_) + "]");
  }
  const std::size_t n = source_->size();
  const auto kk = static_cast<std::size_t>(k);
  const auto stride = static_cast<std::size_t>(max_k_);
  std::vector<std::size_t> neighbors(n * kk);
  std::vector<double> radii(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(indices_.begin() + i * stride, kk,
                neighbors.begin() + i * kk);
    radii[i] = distances_[i * stride + kk - 1];
  }
  return CaptureGeometry(*source_, k, std::move(neighbors), std::move(radii));
}

CaptureGeometry build_geometry(const EmbeddingSet& set, int k) {
  return NeighborTable(set, k).geometry(k);
}

bool capture_by(std::span<const double> x, std::size_t center_index,
                const CaptureGeometry& geom) {
  check_dim(x.size(), geom.source().dim());
  if (center_index >= geom.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "center index " + std::to_string(center_index) +
                    " out of range for set of size " +
                    std::to_string(geom.size()));
  }
  return distance(x, geom.source().row(center_index)) <=
         geom.radius(center_index);
}

bool covered(std::span<const double> x, const CaptureGeometry& geom) {
  check_dim(x.size(), geom.source().dim());
  const EmbeddingSet& src = geom.source();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (distance(x, src.row(i)) <= geom.radius(i)) return true;
  }
  return false;
}

std::size_t count_covered(const EmbeddingSet& xs, const CaptureGeometry& geom) {
  check_dim(xs.dim(), geom.source().dim());
  std::vector<std::uint8_t> hit(xs.size(), 0);
  parallel_for(xs.size(),
               [&](std::size_t i) { hit[i] = covered(xs.row(i), geom) ? 1 : 0; });
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
}

CrossCapture CrossCapture::swapped() const {
  return CrossCapture{second_ball_counts, first_ball_counts, second_covered,
                      first_covered};
}

CrossCapture cross_capture(const CaptureGeometry& a, const CaptureGeometry& b) {
  const EmbeddingSet& sa = a.source();
  const EmbeddingSet& sb = b.source();
  check_dim(sb.dim(), sa.dim());
  if (a.k() != b.k()) {
    throw Error(ErrorCode::kInvalidArgument,
                "geometries were built with different k");
  }
  CrossCapture out;
  out.first_ball_counts.assign(sa.size(), 0);
  out.first_covered.assign(sa.size(), 0);
  out.second_ball_counts.assign(sb.size(), 0);
  out.second_covered.assign(sb.size(), 0);

  // Two row-oriented passes so each worker writes only its own slot.
  parallel_for(sa.size(), [&](std::size_t i) {
    const auto xi = sa.row(i);
    std::size_t inside = 0;
    bool hit = false;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      const double dist = distance(xi, sb.row(j));
      if (dist <= a.radius(i)) ++inside;
      if (dist <= b.radius(j)) hit = true;
    }
    out.first_ball_counts[i] = inside;
    out.first_covered[i] = hit ? 1 : 0;
  });
  parallel_for(sb.size(), [&](std::size_t j) {
    const auto xj = sb.row(j);
    std::size_t inside = 0;
    bool hit = false;
    for (std::size_t i = 0; i < sa.size(); ++i) {
      const double dist = distance(xj, sa.row(i));
      if (dist <= b.radius(j)) ++inside;
      if (dist <= a.radius(i)) hit = true;
    }
    out.second_ball_counts[j] = inside;
    out.second_covered[j] = hit ? 1 : 0;
  });
  return out;
}

PairGeometry PairGeometry::swapped() const {
  return PairGeometry{second, first, cross.swapped()};
}

PairGeometry build_pair_geometry(const EmbeddingSet& first,
                                 const EmbeddingSet& second, int k) {
  check_dim(second.dim(), first.dim());
  CaptureGeometry ga = build_geometry(first, k);
  CaptureGeometry gb = build_geometry(second, k);
  CrossCapture cross = cross_capture(ga, gb);
  return PairGeometry{std::move(ga), std::move(gb), std::move(cross)};
}

PairIndex::PairIndex(const EmbeddingSet& first, const EmbeddingSet& second,
                     int max_k)
    : first_((check_dim(second.dim(), first.dim()), first), max_k),
      second_(second, max_k) {}

PairGeometry PairIndex::at(int k) const {
  CaptureGeometry ga = first_.geometry(k);
  CaptureGeometry gb = second_.geometry(k);
  CrossCapture cross = cross_capture(ga, gb);
  return PairGeometry{std::move(ga), std::move(gb), std::move(cross)};
}

}  // namespace markeval
