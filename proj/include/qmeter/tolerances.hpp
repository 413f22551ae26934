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

namespace qmeter {

// Numeric guards for double-precision dense algebra at dimension <= 64.
inline constexpr double kNormTol = 1e-9;   // input validation (norms, traces, hermiticity)
inline constexpr double kReconTol = 1e-10; // decomposition reconstruction error
inline constexpr double kZeroTol = 1e-12;  // spectral weight below this is discarded
inline constexpr double kDegenTol = 1e-9;  // repeated-coefficient flag
inline constexpr double kPhysTol = 1e-9;   // device isometry deviation

// Default decision thresholds, overridable per call and from the CLI.
inline constexpr double kDefaultDelta = 0.1;         // off-diagonal-ratio reliability cut
inline constexpr double kDefaultEpsilon = 0.05;      // channel triviality cut
inline constexpr double kDefaultEpsilonBits = 1e-9;  // classification cut, in bits

}  // namespace qmeter
