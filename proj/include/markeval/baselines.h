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

#ifndef MARKEVAL_BASELINES_H_
#define MARKEVAL_BASELINES_H_

#include <Eigen/Dense>

#include "markeval/embedding_set.h"
#include "markeval/geometry.h"

namespace markeval {

// Improved precision/recall over k-NN hyperspheres.
struct PrecisionRecall {
  double precision = 0.0;  // share of evaluation samples covered by reference
  double recall = 0.0;     // share of reference samples covered by evaluation
};

PrecisionRecall impar(const PairGeometry& reference_evaluation);
PrecisionRecall impar(const EmbeddingSet& reference,
                      const EmbeddingSet& evaluation, int k);

struct GaussianFit {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;  // unbiased, 1/(n-1)
};

GaussianFit fit_gaussian(const EmbeddingSet& set);

// Squared Frechet distance between the Gaussian fits of the two sets,
//   |mu_r - mu_e|^2 + Tr(Sigma_r + Sigma_e - 2 (Sigma_r Sigma_e)^{1/2}).
// The trace of the square root is taken from the eigenvalues of the symmetric
// matrix Sigma_r^{1/2} Sigma_e Sigma_r^{1/2}; eigenvalues below
// -1e-9 * lambda_max are clamped to zero, as is a negative final result.
double fid(const GaussianFit& reference, const GaussianFit& evaluation);
double fid(const EmbeddingSet& reference, const EmbeddingSet& evaluation);

}  // namespace markeval

#endif  // MARKEVAL_BASELINES_H_
