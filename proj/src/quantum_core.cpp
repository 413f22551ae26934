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

#include "qmeter/quantum_core.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "qmeter/errors.hpp"

namespace qmeter {

BipartiteState tensor_compose(const PureState& sys, Eigen::Index pointer_index,
                              Eigen::Index m) {
  if (m < 1) {
    throw InvalidDimension("tensor_compose: pointer dimension must be >= 1");
  }
  if (pointer_index < 0 || pointer_index >= m) {
    throw IndexError("tensor_compose: pointer_index " +
                     std::to_string(pointer_index) +
                     " out of range for dimension " + std::to_string(m));
  }
  Matrix beta = Matrix::Zero(sys.dim(), m);
  beta.col(pointer_index) = sys.amplitudes();
  return BipartiteState(std::move(beta), sys.basis_labels(),
                        default_labels('p', m));
}

DensityOperator partial_trace(const BipartiteState& state, Side traced_out) {
  const Matrix& beta = state.beta();
  if (traced_out == Side::pointer) {
    // rho_S(i, i') = sum_j beta(i, j) * conj(beta(i', j))
    Matrix rho = beta * beta.adjoint();
    return DensityOperator(std::move(rho), state.system_labels());
  }
  // rho_M(j, j') = sum_i beta(i, j) * conj(beta(i, j'))
  Matrix rho = beta.transpose() * beta.conjugate();
  return DensityOperator(std::move(rho), state.pointer_labels());
}

SchmidtDecomposition schmidt_decompose(const BipartiteState& state) {
  Eigen::JacobiSVD<Matrix> svd(state.beta(),
                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& singular = svd.singularValues();
  const Eigen::Index rank = singular.size();

  SchmidtDecomposition out;
  out.coefficients.reserve(rank);
  out.left_vectors.reserve(rank);
  out.right_vectors.reserve(rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    Vector left = svd.matrixU().col(k);
    Vector right = svd.matrixV().col(k).conjugate();
    // Phase convention: first non-negligible left component real positive,
    // the right vector absorbs the compensating phase.
    for (Eigen::Index i = 0; i < left.size(); ++i) {
      const double mag = std::abs(left(i));
      if (mag > kZeroTol) {
        const Complex phase = left(i) / mag;
        left *= std::conj(phase);
        right *= phase;
        break;
      }
    }
    out.coefficients.push_back(singular(k));
    out.left_vectors.push_back(std::move(left));
    out.right_vectors.push_back(std::move(right));
  }
  for (Eigen::Index k = 0; k + 1 < rank; ++k) {
    if (singular(k) - singular(k + 1) < kDegenTol) {
      out.degenerate = true;
      break;
    }
  }
  return out;
}

SpectralDecomposition spectral_decompose(const DensityOperator& rho) {
  const Matrix& m = rho.matrix();
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kNormTol) {
    throw InvalidOperator("spectral_decompose: hermiticity deviation " +
                          std::to_string(herm_dev) + " beyond tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw InvalidOperator("spectral_decompose: eigensolver failed");
  }
  const auto& values = solver.eigenvalues();  // ascending
  const auto& vectors = solver.eigenvectors();
  const Eigen::Index d = values.size();

  SpectralDecomposition out;
  Eigen::Index idx = d - 1;
  while (idx >= 0) {
    // Walk one near-degenerate group, largest eigenvalues first.
    Eigen::Index lo = idx;
    while (lo > 0 && values(lo) - values(lo - 1) < kDegenTol) --lo;
    const int mult = static_cast<int>(idx - lo + 1);
    double mean = 0.0;
    Matrix projector = Matrix::Zero(d, d);
    for (Eigen::Index k = lo; k <= idx; ++k) {
      mean += values(k);
      projector += vectors.col(k) * vectors.col(k).adjoint();
    }
    mean /= mult;
    if (std::abs(mean) >= kZeroTol) {
      out.eigenvalues.push_back(mean);
      out.projectors.push_back(std::move(projector));
      out.multiplicities.push_back(mult);
    }
    idx = lo - 1;
  }
  return out;
}

DensityOperator collapse_mixture(const BipartiteState& state) {
  const Matrix& beta = state.beta();
  const Eigen::Index n = beta.rows();
  const Eigen::Index m = beta.cols();
  Matrix rho = Matrix::Zero(n * m, n * m);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n * m));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      rho(i * m + j, i * m + j) = std::norm(beta(i, j));
      labels.push_back(state.system_labels()[i] + "⊗" +
                       state.pointer_labels()[j]);
    }
  }
  return DensityOperator(std::move(rho), std::move(labels));
}

}  // namespace qmeter
