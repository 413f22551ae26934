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

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qmeter/tolerances.hpp"

namespace qmeter {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// "a0", "a1", ... for prefix 'a'.
std::vector<std::string> default_labels(char prefix, Eigen::Index count);

/// Normalized amplitude vector over a labeled orthonormal basis.
/// Immutable after construction; construction validates normalization.
class PureState {
 public:
  explicit PureState(Vector amplitudes);
  PureState(Vector amplitudes, std::vector<std::string> basis_labels);

  /// The k-th basis vector of an n-dimensional space.
  static PureState basis_state(Eigen::Index n, Eigen::Index k);

  /// Equiprobable standard state, every amplitude sqrt(1/n).
  static PureState uniform(Eigen::Index n);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

 private:
  Vector amplitudes_;
  std::vector<std::string> labels_;
};

/// Composite system-pointer amplitude matrix beta(i, j), system index i,
/// pointer index j. Total squared norm is 1 within kNormTol.
class BipartiteState {
 public:
  explicit BipartiteState(Matrix beta);
  BipartiteState(Matrix beta, std::vector<std::string> system_labels,
                 std::vector<std::string> pointer_labels);

  Eigen::Index system_dim() const { return beta_.rows(); }
  Eigen::Index pointer_dim() const { return beta_.cols(); }
  const Matrix& beta() const { return beta_; }
  const std::vector<std::string>& system_labels() const { return system_labels_; }
  const std::vector<std::string>& pointer_labels() const { return pointer_labels_; }

 private:
  Matrix beta_;
  std::vector<std::string> system_labels_;
  std::vector<std::string> pointer_labels_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix on a labeled basis.
/// Hermiticity and trace are always checked; positivity is checked at
/// construction only up to dimension 64 (the eigensolve is O(d^3)).
class DensityOperator {
 public:
  explicit DensityOperator(Matrix matrix);
  DensityOperator(Matrix matrix, std::vector<std::string> basis_labels);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  /// Smallest eigenvalue (runs a dense eigensolve).
  double min_eigenvalue() const;

 private:
  Matrix matrix_;
  std::vector<std::string> labels_;
};

}  // namespace qmeter
