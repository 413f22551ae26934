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

#include <cmath>
#include <doctest.h>

#include "qmeter/errors.hpp"
#include "test_helpers.hpp"

using namespace qmeter;
using qmeter::testing::random_bipartite_state;
using qmeter::testing::random_pure_state;

namespace {

Matrix reconstruct(const SchmidtDecomposition& schmidt, Eigen::Index n,
                   Eigen::Index m) {
  Matrix beta = Matrix::Zero(n, m);
  for (std::size_t k = 0; k < schmidt.coefficients.size(); ++k) {
    beta += schmidt.coefficients[k] * schmidt.left_vectors[k] *
            schmidt.right_vectors[k].transpose();
  }
  return beta;
}

}  // namespace

TEST_CASE("tensor_compose places the system amplitudes in the ready column") {
  SUBCASE("basis state") {
    const auto composed = tensor_compose(PureState::basis_state(2, 0), 0, 2);
    CHECK(composed.beta()(0, 0) == Complex(1.0, 0.0));
    CHECK(composed.beta()(0, 1) == Complex(0.0, 0.0));
    CHECK(composed.beta()(1, 0) == Complex(0.0, 0.0));
    CHECK(composed.beta()(1, 1) == Complex(0.0, 0.0));
  }

  SUBCASE("superposition goes to the selected column only") {
    const double r = 1.0 / std::sqrt(2.0);
    Vector amps(2);
    amps << r, r;
    const auto composed = tensor_compose(PureState(amps), 0, 3);
    CHECK(composed.pointer_dim() == 3);
    CHECK(std::abs(composed.beta()(0, 0) - Complex(r, 0)) < 1e-15);
    CHECK(std::abs(composed.beta()(1, 0) - Complex(r, 0)) < 1e-15);
    CHECK(composed.beta().col(1).norm() == 0.0);
    CHECK(composed.beta().col(2).norm() == 0.0);
  }

  SUBCASE("norm is conserved for random inputs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const auto state = random_pure_state(5, rng);
      const auto composed = tensor_compose(state, 2, 7);
      CHECK(std::abs(composed.beta().squaredNorm() - 1.0) < 1e-12);
    }
  }

  SUBCASE("pointer index out of range") {
    CHECK_THROWS_AS(tensor_compose(PureState::basis_state(2, 0), 2, 2),
                    IndexError);
    CHECK_THROWS_AS(tensor_compose(PureState::basis_state(2, 0), -1, 2),
                    IndexError);
  }
}

TEST_CASE("partial_trace reduces each side correctly") {
  SUBCASE("perfectly correlated state gives diagonal pointer reduction") {
    Matrix beta = Matrix::Zero(2, 2);
    beta(0, 0) = std::sqrt(0.7);
    beta(1, 1) = std::sqrt(0.3);
    const auto rho_m = partial_trace(BipartiteState(beta), Side::system);
    CHECK(std::abs(rho_m.matrix()(0, 0) - Complex(0.7, 0)) < 1e-12);
    CHECK(std::abs(rho_m.matrix()(1, 1) - Complex(0.3, 0)) < 1e-12);
    CHECK(std::abs(rho_m.matrix()(0, 1)) < 1e-12);
  }

  SUBCASE("product state reduces to a pure projector") {
    std::mt19937_64 rng(5);
    const auto sys = random_pure_state(4, rng);
    const auto composed = tensor_compose(sys, 0, 3);
    const auto rho_s = partial_trace(composed, Side::pointer);
    const Matrix expected = sys.amplitudes() * sys.amplitudes().adjoint();
    CHECK((rho_s.matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_s.matrix());
    CHECK(solver.eigenvalues().head(3).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(solver.eigenvalues()(3) - 1.0) < 1e-12);
  }

  SUBCASE("both reductions share the nonzero spectrum") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const auto state = random_bipartite_state(3, 3, rng);
      const auto rho_s = partial_trace(state, Side::pointer);
      const auto rho_m = partial_trace(state, Side::system);
      CHECK(std::abs(rho_s.matrix().trace().real() - 1.0) < 1e-12);
      Eigen::SelfAdjointEigenSolver<Matrix> es(rho_s.matrix());
      Eigen::SelfAdjointEigenSolver<Matrix> em(rho_m.matrix());
      CHECK((es.eigenvalues() - em.eigenvalues()).cwiseAbs().maxCoeff() <
            1e-10);
    }
  }
}

TEST_CASE("schmidt_decompose") {
  SUBCASE("diagonal state with distinct weights") {
    Matrix beta = Matrix::Zero(2, 2);
    beta(0, 0) = std::sqrt(0.7);
    beta(1, 1) = std::sqrt(0.3);
    const auto schmidt = schmidt_decompose(BipartiteState(beta));
    REQUIRE(schmidt.coefficients.size() == 2);
    CHECK(std::abs(schmidt.coefficients[0] - std::sqrt(0.7)) < 1e-12);
    CHECK(std::abs(schmidt.coefficients[1] - std::sqrt(0.3)) < 1e-12);
    CHECK_FALSE(schmidt.degenerate);
    // computational vectors up to phase; convention makes them exact
    CHECK(std::abs(schmidt.left_vectors[0](0) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(schmidt.right_vectors[0](0) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(schmidt.left_vectors[1](1) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(schmidt.right_vectors[1](1) - Complex(1, 0)) < 1e-12);
  }

  SUBCASE("maximally entangled state is flagged degenerate") {
    const auto schmidt = schmidt_decompose(
        BipartiteState(Matrix::Identity(2, 2) / std::sqrt(2.0)));
    REQUIRE(schmidt.coefficients.size() == 2);
    CHECK(std::abs(schmidt.coefficients[0] - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(schmidt.coefficients[1] - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(schmidt.degenerate);
  }

  SUBCASE("random rectangular states reconstruct and normalize") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
      const auto state = random_bipartite_state(3, 4, rng);
      const auto schmidt = schmidt_decompose(state);
      double total = 0.0;
      for (double c : schmidt.coefficients) total += c * c;
      CHECK(std::abs(total - 1.0) < 1e-12);
      const Matrix rebuilt = reconstruct(schmidt, 3, 4);
      CHECK((rebuilt - state.beta()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  SUBCASE("phase convention pins the left vectors") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      const auto schmidt = schmidt_decompose(random_bipartite_state(4, 4, rng));
      for (const Vector& left : schmidt.left_vectors) {
        for (Eigen::Index i = 0; i < left.size(); ++i) {
          if (std::abs(left(i)) > 1e-12) {
            CHECK(std::abs(left(i).imag()) < 1e-12);
            CHECK(left(i).real() > 0.0);
            break;
          }
        }
      }
    }
  }

  SUBCASE("coefficients match the reduced spectra") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 15; ++trial) {
      const auto state = random_bipartite_state(3, 5, rng);
      const auto schmidt = schmidt_decompose(state);
      Eigen::SelfAdjointEigenSolver<Matrix> solver(
          partial_trace(state, Side::pointer).matrix());
      for (std::size_t k = 0; k < schmidt.coefficients.size(); ++k) {
        const double eig = solver.eigenvalues()(2 - static_cast<Eigen::Index>(k));
        CHECK(std::abs(schmidt.coefficients[k] -
                       std::sqrt(std::max(0.0, eig))) < 1e-10);
      }
    }
  }
}

TEST_CASE("spectral_decompose") {
  SUBCASE("already diagonal operator") {
    Matrix rho = Matrix::Zero(2, 2);
    rho(0, 0) = 0.7;
    rho(1, 1) = 0.3;
    const auto spectral = spectral_decompose(DensityOperator(rho));
    REQUIRE(spectral.eigenvalues.size() == 2);
    CHECK(std::abs(spectral.eigenvalues[0] - 0.7) < 1e-12);
    CHECK(std::abs(spectral.eigenvalues[1] - 0.3) < 1e-12);
    CHECK(spectral.multiplicities[0] == 1);
    CHECK(std::abs(spectral.projectors[0](0, 0) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(spectral.projectors[1](1, 1) - Complex(1, 0)) < 1e-12);
  }

  SUBCASE("degenerate identity collapses to one projector") {
    const auto spectral =
        spectral_decompose(DensityOperator(Matrix::Identity(2, 2) * 0.5));
    REQUIRE(spectral.eigenvalues.size() == 1);
    CHECK(std::abs(spectral.eigenvalues[0] - 0.5) < 1e-12);
    CHECK(spectral.multiplicities[0] == 2);
    CHECK((spectral.projectors[0] - Matrix::Identity(2, 2)).norm() < 1e-12);
  }

  SUBCASE("zero weights are dropped") {
    std::mt19937_64 rng(3);
    const auto sys = random_pure_state(3, rng);
    const auto rho = partial_trace(tensor_compose(sys, 0, 2), Side::pointer);
    const auto spectral = spectral_decompose(rho);
    REQUIRE(spectral.eigenvalues.size() == 1);
    CHECK(std::abs(spectral.eigenvalues[0] - 1.0) < 1e-12);
  }

  SUBCASE("reconstruction and trace probabilities") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
      const auto state = random_bipartite_state(4, 4, rng);
      const auto rho = partial_trace(state, Side::system);
      const auto spectral = spectral_decompose(rho);
      Matrix rebuilt = Matrix::Zero(4, 4);
      double prob_total = 0.0;
      for (std::size_t g = 0; g < spectral.eigenvalues.size(); ++g) {
        rebuilt += spectral.eigenvalues[g] * spectral.projectors[g];
        const double pr =
            (rho.matrix() * spectral.projectors[g]).trace().real();
        // Tr(rho P) = eigenvalue * rank for an eigenprojector
        CHECK(std::abs(pr - spectral.eigenvalues[g] *
                                spectral.multiplicities[g]) < 1e-10);
        prob_total += pr;
      }
      CHECK((rebuilt - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(std::abs(prob_total - 1.0) < 1e-10);
    }
  }

  SUBCASE("projectors are orthogonal idempotents") {
    std::mt19937_64 rng(29);
    const auto state = random_bipartite_state(5, 5, rng);
    const auto spectral =
        spectral_decompose(partial_trace(state, Side::pointer));
    for (std::size_t a = 0; a < spectral.projectors.size(); ++a) {
      for (std::size_t b = 0; b < spectral.projectors.size(); ++b) {
        const Matrix product = spectral.projectors[a] * spectral.projectors[b];
        const Matrix expected =
            (a == b) ? spectral.projectors[a] : Matrix::Zero(5, 5).eval();
        CHECK((product - expected).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }

  SUBCASE("non-hermitian input is rejected at construction") {
    Matrix bad(2, 2);
    bad << Complex(0.5, 0), Complex(0.1, 0), Complex(0.3, 0), Complex(0.5, 0);
    CHECK_THROWS_AS(DensityOperator{bad}, InvalidOperator);
  }
}

TEST_CASE("collapse_mixture") {
  SUBCASE("correlated state becomes the classical mixture") {
    Matrix beta = Matrix::Zero(2, 2);
    beta(0, 0) = std::sqrt(0.7);
    beta(1, 1) = std::sqrt(0.3);
    const auto mixture = collapse_mixture(BipartiteState(beta));
    CHECK(mixture.dim() == 4);
    CHECK(std::abs(mixture.matrix()(0, 0) - Complex(0.7, 0)) < 1e-12);
    CHECK(std::abs(mixture.matrix()(3, 3) - Complex(0.3, 0)) < 1e-12);
    CHECK(std::abs(mixture.matrix()(1, 1)) < 1e-12);
    CHECK(std::abs(mixture.matrix()(2, 2)) < 1e-12);
    CHECK(std::abs(mixture.matrix()(0, 3)) == 0.0);
  }

  SUBCASE("product state keeps its pointer marginal") {
    std::mt19937_64 rng(31);
    const auto composed = tensor_compose(random_pure_state(3, rng), 1, 2);
    const auto mixture = collapse_mixture(composed);
    double marginal = 0.0;
    for (Eigen::Index i = 0; i < 3; ++i) {
      marginal += mixture.matrix()(i * 2 + 1, i * 2 + 1).real();
    }
    CHECK(std::abs(marginal - 1.0) < 1e-12);
  }

  SUBCASE("diagonal agrees with the full outer product") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
      const auto state = random_bipartite_state(3, 4, rng);
      const auto mixture = collapse_mixture(state);
      // independent oracle: flatten and take the |psi><psi| diagonal
      Vector flat(12);
      for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
          flat(i * 4 + j) = state.beta()(i, j);
        }
      }
      const Matrix outer = flat * flat.adjoint();
      for (Eigen::Index d = 0; d < 12; ++d) {
        CHECK(std::abs(mixture.matrix()(d, d) - outer(d, d)) < 1e-12);
      }
    }
  }
}

TEST_CASE("state type invariants") {
  SUBCASE("unnormalized inputs are rejected") {
    Vector amps(2);
    amps << 1.0, 0.5;
    CHECK_THROWS_AS(PureState{amps}, InvalidState);
    CHECK_THROWS_AS(BipartiteState(Matrix::Identity(2, 2)), InvalidState);
  }

  SUBCASE("label counts must match") {
    Vector amps(2);
    amps << 1.0, 0.0;
    CHECK_THROWS_AS(PureState(amps, {"only-one"}), DimensionError);
  }

  SUBCASE("trace-deficient operators are rejected") {
    CHECK_THROWS_AS(DensityOperator(Matrix::Identity(2, 2) * 0.4),
                    InvalidOperator);
  }
}
