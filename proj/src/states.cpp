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

#include "qmeter/states.hpp"

#include <cmath>

#include "qmeter/errors.hpp"

namespace qmeter {

namespace {

void check_label_count(std::size_t labels, Eigen::Index expected,
                       const char* what) {
  if (static_cast<Eigen::Index>(labels) != expected) {
    throw DimensionError(std::string(what) + ": label count " +
                         std::to_string(labels) + " does not match dimension " +
                         std::to_string(expected));
  }
}

}  // namespace

std::vector<std::string> default_labels(char prefix, Eigen::Index count) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) {
    labels.push_back(prefix + std::to_string(i));
  }
  return labels;
}

PureState::PureState(Vector amplitudes)
    : PureState(std::move(amplitudes), {}) {}

PureState::PureState(Vector amplitudes, std::vector<std::string> basis_labels)
    : amplitudes_(std::move(amplitudes)), labels_(std::move(basis_labels)) {
  if (amplitudes_.size() < 1) {
    throw InvalidDimension("PureState: dimension must be >= 1");
  }
  if (labels_.empty()) {
    labels_ = default_labels('a', amplitudes_.size());
  }
  check_label_count(labels_.size(), amplitudes_.size(), "PureState");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw InvalidState("PureState: squared norm " + std::to_string(norm2) +
                       " deviates from 1 beyond tolerance");
  }
}

PureState PureState::basis_state(Eigen::Index n, Eigen::Index k) {
  if (n < 1) {
    throw InvalidDimension("basis_state: dimension must be >= 1");
  }
  if (k < 0 || k >= n) {
    throw IndexError("basis_state: index " + std::to_string(k) +
                     " out of range for dimension " + std::to_string(n));
  }
  Vector amps = Vector::Zero(n);
  amps(k) = 1.0;
  return PureState(std::move(amps));
}

PureState PureState::uniform(Eigen::Index n) {
  if (n < 1) {
    throw InvalidDimension("uniform: dimension must be >= 1");
  }
  Vector amps = Vector::Constant(n, Complex(1.0 / std::sqrt(double(n)), 0.0));
  return PureState(std::move(amps));
}

BipartiteState::BipartiteState(Matrix beta)
    : BipartiteState(std::move(beta), {}, {}) {}

BipartiteState::BipartiteState(Matrix beta,
                               std::vector<std::string> system_labels,
                               std::vector<std::string> pointer_labels)
    : beta_(std::move(beta)),
      system_labels_(std::move(system_labels)),
      pointer_labels_(std::move(pointer_labels)) {
  if (beta_.rows() < 1 || beta_.cols() < 1) {
    throw InvalidDimension("BipartiteState: both sides must have dimension >= 1");
  }
  if (system_labels_.empty()) system_labels_ = default_labels('a', beta_.rows());
  if (pointer_labels_.empty()) pointer_labels_ = default_labels('p', beta_.cols());
  check_label_count(system_labels_.size(), beta_.rows(), "BipartiteState");
  check_label_count(pointer_labels_.size(), beta_.cols(), "BipartiteState");
  const double norm2 = beta_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    throw InvalidState("BipartiteState: squared norm " + std::to_string(norm2) +
                       " deviates from 1 beyond tolerance");
  }
}

DensityOperator::DensityOperator(Matrix matrix)
    : DensityOperator(std::move(matrix), {}) {}

DensityOperator::DensityOperator(Matrix matrix,
                                 std::vector<std::string> basis_labels)
    : matrix_(std::move(matrix)), labels_(std::move(basis_labels)) {
  if (matrix_.rows() < 1 || matrix_.rows() != matrix_.cols()) {
    throw InvalidDimension("DensityOperator: matrix must be square, dim >= 1");
  }
  if (labels_.empty()) labels_ = default_labels('e', matrix_.rows());
  check_label_count(labels_.size(), matrix_.rows(), "DensityOperator");

  const double herm_dev = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kNormTol) {
    throw InvalidOperator("DensityOperator: hermiticity deviation " +
                          std::to_string(herm_dev) + " beyond tolerance");
  }
  const double trace_dev = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (trace_dev > kNormTol) {
    throw InvalidOperator("DensityOperator: trace deviates from 1 by " +
                          std::to_string(trace_dev));
  }
  // Positivity costs an eigensolve; only enforced eagerly at small dimension.
  if (matrix_.rows() <= 64 && min_eigenvalue() < -kNormTol) {
    throw InvalidOperator("DensityOperator: negative eigenvalue beyond tolerance");
  }
}

double DensityOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace qmeter
