// Copyright 2026 The Qmeter Authors
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

#pragma once

#include <random>

#include "qmeter/device.hpp"
#include "qmeter/states.hpp"

namespace qmeter::testing {

inline Matrix random_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                                    std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

inline PureState random_pure_state(Eigen::Index n, std::mt19937_64& rng) {
  Matrix m = random_complex_matrix(n, 1, rng);
  Vector v = m.col(0);
  v.normalize();
  return PureState(v);
}

inline BipartiteState random_bipartite_state(Eigen::Index n, Eigen::Index m,
                                             std::mt19937_64& rng) {
  Matrix beta = random_complex_matrix(n, m, rng);
  beta /= beta.norm();
  return BipartiteState(beta);
}

/// Random isometry device: orthonormalized random columns in dimension n*m.
inline MeasurementDevice random_device(Eigen::Index n, Eigen::Index m,
                                       std::mt19937_64& rng) {
  Matrix raw = random_complex_matrix(n * m, n, rng);
  Eigen::HouseholderQR<Matrix> qr(raw);
  Matrix q = qr.householderQ() * Matrix::Identity(n * m, n);
  std::vector<Vector> columns;
  for (Eigen::Index k = 0; k < n; ++k) columns.push_back(q.col(k));
  return from_unitary(n, m, columns);
}

/// Random row-stochastic matrix.
inline Eigen::MatrixXd random_channel_probs(Eigen::Index n, Eigen::Index m,
                                            std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::MatrixXd probs(n, m);
  for (Eigen::Index k = 0; k < n; ++k) {
    double row_sum = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      probs(k, j) = uniform(rng) + 1e-6;
      row_sum += probs(k, j);
    }
    probs.row(k) /= row_sum;
  }
  return probs;
}

inline std::vector<double> random_distribution(std::size_t n,
                                               std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> probs(n);
  double total = 0.0;
  for (double& p : probs) {
    p = uniform(rng) + 1e-6;
    total += p;
  }
  for (double& p : probs) p /= total;
  return probs;
}

}  // namespace qmeter::testing
