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

#include "qmeter/states.hpp"

namespace qmeter {

/// Biorthogonal factorization of a bipartite pure state:
/// beta = sum_i coefficients[i] * left_vectors[i] * right_vectors[i]^T.
/// Coefficients are non-negative and sorted descending; the left and right
/// vector sets are each orthonormal. degenerate marks repeated coefficients
/// within kDegenTol, in which case the factorizing bases are not unique.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<Vector> left_vectors;   // system side
  std::vector<Vector> right_vectors;  // pointer side
  bool degenerate = false;
};

/// rho = sum_i eigenvalues[i] * projectors[i], eigenvalues sorted descending,
/// grouped within kDegenTol, weights below kZeroTol dropped. Projectors are
/// mutually orthogonal with rank multiplicities[i].
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Matrix> projectors;
  std::vector<int> multiplicities;
};

enum class Side { system, pointer };

/// Places the system amplitudes in the given pointer column:
/// beta(i, j) = alpha_i when j == pointer_index, else 0.
BipartiteState tensor_compose(const PureState& sys, Eigen::Index pointer_index,
                              Eigen::Index m);

/// Reduced state after tracing out `traced_out`. Tracing out the pointer
/// yields the system's reduced operator and vice versa.
DensityOperator partial_trace(const BipartiteState& state, Side traced_out);

SchmidtDecomposition schmidt_decompose(const BipartiteState& state);

/// Throws InvalidOperator if rho deviates from Hermitian beyond kNormTol.
SpectralDecomposition spectral_decompose(const DensityOperator& rho);

/// Full decoherence in the product basis: the diagonal mixture
/// sum_ij |beta(i,j)|^2 |a_i p_j><a_i p_j| on the (n*m)-dimensional
/// product space.
DensityOperator collapse_mixture(const BipartiteState& state);

}  // namespace qmeter
