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

#include "qmeter/interpretation.hpp"

#include <algorithm>
#include <cmath>

namespace qmeter {

std::string to_string(Interpretation i) {
  switch (i) {
    case Interpretation::kochen_dieks: return "kochen_dieks";
    case Interpretation::vermaas_dieks: return "vermaas_dieks";
    case Interpretation::collapse: return "collapse";
    case Interpretation::pointer_basis: return "pointer_basis";
  }
  return "pointer_basis";
}

ContextAssignment kochen_dieks_context(const BipartiteState& state) {
  const SchmidtDecomposition schmidt = schmidt_decompose(state);
  ContextAssignment out;
  out.interpretation = Interpretation::kochen_dieks;
  out.pointer_side_basis = schmidt.right_vectors;
  out.probabilities.reserve(schmidt.coefficients.size());
  for (double c : schmidt.coefficients) {
    out.probabilities.push_back(c * c);
  }
  out.degenerate = schmidt.degenerate;
  return out;
}

ContextAssignment vermaas_dieks_context(const BipartiteState& state) {
  const DensityOperator rho = partial_trace(state, Side::system);
  const SpectralDecomposition spectral = spectral_decompose(rho);

  ContextAssignment out;
  out.interpretation = Interpretation::vermaas_dieks;
  for (std::size_t g = 0; g < spectral.eigenvalues.size(); ++g) {
    if (spectral.multiplicities[g] > 1) out.degenerate = true;
    // Expand the projector into per-vector weights via its own eigenbasis.
    Eigen::SelfAdjointEigenSolver<Matrix> solver(spectral.projectors[g]);
    const auto& values = solver.eigenvalues();
    for (Eigen::Index c = 0; c < values.size(); ++c) {
      if (values(c) < 0.5) continue;  // null directions of the projector
      out.pointer_side_basis.push_back(solver.eigenvectors().col(c));
      out.probabilities.push_back(spectral.eigenvalues[g]);
    }
  }
  return out;
}

ContextAssignment collapse_context(const BipartiteState& state) {
  const DensityOperator mixture = collapse_mixture(state);
  const Eigen::Index m = state.pointer_dim();

  ContextAssignment out;
  out.interpretation = Interpretation::collapse;
  for (Eigen::Index j = 0; j < m; ++j) {
    Vector basis_vector = Vector::Zero(m);
    basis_vector(j) = 1.0;
    out.pointer_side_basis.push_back(std::move(basis_vector));
    // Pointer marginal of the decohered mixture.
    double p = 0.0;
    for (Eigen::Index i = 0; i < state.system_dim(); ++i) {
      p += mixture.matrix()(i * m + j, i * m + j).real();
    }
    out.probabilities.push_back(p);
  }
  return out;
}

ContextAssignment pointer_basis_context(const BipartiteState& state) {
  ContextAssignment out;
  out.interpretation = Interpretation::pointer_basis;
  const std::vector<double> probs = pointer_distribution(state);
  for (Eigen::Index j = 0; j < state.pointer_dim(); ++j) {
    Vector basis_vector = Vector::Zero(state.pointer_dim());
    basis_vector(j) = 1.0;
    out.pointer_side_basis.push_back(std::move(basis_vector));
    out.probabilities.push_back(probs[static_cast<std::size_t>(j)]);
  }
  return out;
}

PointerMisalignment pointer_misalignment(const BipartiteState& state) {
  const SchmidtDecomposition schmidt = schmidt_decompose(state);
  PointerMisalignment out;
  out.degenerate = schmidt.degenerate;
  double worst_overlap = 1.0;
  for (std::size_t i = 0; i < schmidt.coefficients.size(); ++i) {
    if (schmidt.coefficients[i] <= kZeroTol) continue;
    const Vector& v = schmidt.right_vectors[i];
    double best = 0.0;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      best = std::max(best, std::norm(v(j)));
    }
    worst_overlap = std::min(worst_overlap, best);
  }
  out.value = std::clamp(1.0 - worst_overlap, 0.0, 1.0);
  return out;
}

AscriptionComparison ascription_comparison(const BipartiteState& state) {
  return AscriptionComparison{
      kochen_dieks_context(state), vermaas_dieks_context(state),
      collapse_context(state), pointer_basis_context(state),
      pointer_misalignment(state)};
}

}  // namespace qmeter
