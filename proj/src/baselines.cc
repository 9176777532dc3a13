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

#include <algorithm>
#include <cmath>
#include <string>

#include "markeval/error.h"

namespace markeval {
namespace {

// Covariance products are PSD in exact arithmetic; negative eigenvalues are
// rounding noise (|lambda| ~ 1e-9 * lambda_max or below) and become zero.
Eigen::VectorXd clamped_eigenvalues(
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& solver) {
  return solver.eigenvalues().cwiseMax(0.0);
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> decompose(
    const Eigen::MatrixXd& m, const char* what) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNumericalFailure,
                std::string("eigendecomposition of ") + what +
                    " did not converge");
  }
  return solver;
}

}  // namespace

PrecisionRecall impar(const PairGeometry& pair) {
  PrecisionRecall pr;
  std::size_t covered_eval = 0;
  for (auto f : pair.cross.second_covered) covered_eval += f;
  std::size_t covered_ref = 0;
  for (auto f : pair.cross.first_covered) covered_ref += f;
  pr.precision = static_cast<double>(covered_eval) /
                 static_cast<double>(pair.second.size());
  pr.recall = static_cast<double>(covered_ref) /
              static_cast<double>(pair.first.size());
  return pr;
}

PrecisionRecall impar(const EmbeddingSet& reference,
                      const EmbeddingSet& evaluation, int k) {
  return impar(build_pair_geometry(reference, evaluation, k));
}

GaussianFit fit_gaussian(const EmbeddingSet& set) {
  const auto n = static_cast<Eigen::Index>(set.size());
  const auto d = static_cast<Eigen::Index>(set.dim());
  if (n < 2) {
    throw Error(ErrorCode::kMinSamples, "Gaussian fit needs >= 2 samples");
  }
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      x(set.values().data(), n, d);
  GaussianFit fit;
  fit.mean = x.colwise().mean().transpose();
  const Eigen::MatrixXd centered = x.rowwise() - fit.mean.transpose();
  fit.covariance =
      (centered.transpose() * centered) / static_cast<double>(n - 1);
  return fit;
}

double fid(const GaussianFit& reference, const GaussianFit& evaluation) {
  if (reference.mean.size() != evaluation.mean.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "Gaussian fits have dimensions " +
                    std::to_string(reference.mean.size()) + " and " +
                    std::to_string(evaluation.mean.size()));
  }
  const auto ref_solver = decompose(reference.covariance, "reference covariance");
  const Eigen::VectorXd ref_values = clamped_eigenvalues(ref_solver);
  const Eigen::MatrixXd ref_sqrt = ref_solver.eigenvectors() *
                                   ref_values.cwiseSqrt().asDiagonal() *
                                   ref_solver.eigenvectors().transpose();
  Eigen::MatrixXd inner = ref_sqrt * evaluation.covariance * ref_sqrt;
  inner = 0.5 * (inner + inner.transpose()).eval();
  const Eigen::VectorXd inner_values =
      clamped_eigenvalues(decompose(inner, "covariance product"));

  const double mean_term = (reference.mean - evaluation.mean).squaredNorm();
  const double trace_term = reference.covariance.trace() +
                            evaluation.covariance.trace() -
                            2.0 * inner_values.cwiseSqrt().sum();
  return std::max(0.0, mean_term + trace_term);
}

double fid(const EmbeddingSet& reference, const EmbeddingSet& evaluation) {
  if (reference.dim() != evaluation.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sets have dimensions " + std::to_string(reference.dim()) +
                    " and " + std::to_string(evaluation.dim()));
  }
  return fid(fit_gaussian(reference), fit_gaussian(evaluation));
}

}  // namespace markeval
