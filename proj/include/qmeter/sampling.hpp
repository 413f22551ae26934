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

#include <cstdint>
#include <span>
#include <vector>

namespace qmeter {

/// Inclusive prefix sums of `probs`, last entry forced to exactly 1.
std::vector<double> cumulative_distribution(std::span<const double> probs);

/// Index of the first cumulative entry >= u (binary search).
std::size_t categorical_index(std::span<const double> cumulative, double u);

// Categorical counting kernels. Shot t consumes uniform01(seed, stream, t),
// so both kernels produce identical counts for identical arguments; the
// parallel kernel only reorders an integer reduction.

std::vector<std::uint64_t> sample_counts_serial(std::span<const double> probs,
                                                std::uint64_t shots,
                                                std::uint64_t seed,
                                                std::uint64_t stream);

std::vector<std::uint64_t> sample_counts_parallel(std::span<const double> probs,
                                                  std::uint64_t shots,
                                                  std::uint64_t seed,
                                                  std::uint64_t stream);

}  // namespace qmeter
