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

namespace qmeter {

// Stateless counter-based generation: each (seed, stream, counter) triple maps
// to exactly one variate. Draws are order-independent, streams never collide,
// and extending a stream leaves its earlier draws unchanged.

/// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter);

/// Uniform variate in [0, 1) with 53 random mantissa bits.
double uniform01(std::uint64_t seed, std::uint64_t stream,
                 std::uint64_t counter);

}  // namespace qmeter
