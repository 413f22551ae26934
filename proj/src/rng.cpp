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

#include "qmeter/rng.hpp"

namespace qmeter {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
  return mix64(counter ^ mix64(stream ^ mix64(seed)));
}

double uniform01(std::uint64_t seed, std::uint64_t stream,
                 std::uint64_t counter) {
  // Top 53 bits scaled by 2^-53; always in [0, 1).
  return static_cast<double>(counter_hash(seed, stream, counter) >> 11) *
         0x1.0p-53;
}

}  // namespace qmeter
