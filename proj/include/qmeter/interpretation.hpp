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

#include <string>
#include <vector>

#include "qmeter/device.hpp"
#include "qmeter/quantum_core.hpp"

namespace qmeter {

// Rival rules for which apparatus-side basis carries definite values after
// the interaction, and with which probabilities.
enum class Interpretation { kochen_dieks, vermaas_dieks, collapse, pointer_basis };

std::string to_string(Interpretation i);

struct ContextAssignment {
  Interpretation interpretation = Interpretation::pointer_basis;
  std::vector<Vector> pointer_side_basis;  // orthonormal
  std::vector<double> probabilities;       // sums to 1
  bool degenerate = false;                 // basis not unique
};

struct PointerMisalignment {
  double value = 0.0;       // in [0, 1]; 0 iff the bases coincide
  bool degenerate = false;  // value depends on an arbitrary basis choice
};

struct AscriptionComparison {
  ContextAssignment kochen_dieks;
  ContextAssignment vermaas_dieks;
  ContextAssignment collapse;
  ContextAssignment pointer_basis;
  PointerMisalignment misalignment;
};

/// Pointer-side factor basis with squared factorization coefficients as
/// probabilities.
ContextAssignment kochen_dieks_context(const BipartiteState& state);

/// Eigenbasis of the apparatus's reduced operator; degenerate eigenspaces are
/// expanded into (arbitrarily chosen) orthonormal vectors, each weighted by
/// its eigenvalue.
ContextAssignment vermaas_dieks_context(const BipartiteState& state);

/// Computational pointer basis weighted by the decohered mixture's pointer
/// marginal.
ContextAssignment collapse_context(const BipartiteState& state);

/// Computational pointer basis weighted by the outcome distribution.
ContextAssignment pointer_basis_context(const BipartiteState& state);

/// Worst-case squared-overlap deficit between the state's preferred
/// pointer-side basis and the computational pointer basis:
/// 1 - min_i max_j |<p_j|p'_i>|^2 over factor vectors with nonzero weight.
PointerMisalignment pointer_misalignment(const BipartiteState& state);

AscriptionComparison ascription_comparison(const BipartiteState& state);

}  // namespace qmeter
