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

#include "qmeter/sampling.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmeter/errors.hpp"
#include "qmeter/rng.hpp"

namespace qmeter {

std::vector<double> cumulative_distribution(std::span<const double> probs) {
  if (probs.empty()) {
    throw InvalidArgument("cumulative_distribution: empty distribution");
  }
  std::vector<double> cumulative(probs.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    cumulative[i] = running;
  }
  // uniform01 < 1, so a final entry of exactly 1 makes every draw land.
  cumulative.back() = 1.0;
  return cumulative;
}

std::size_t categorical_index(std::span<const double> cumulative, double u) {
  const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
  return static_cast<std::size_t>(it - cumulative.begin());
}

std::vector<std::uint64_t> sample_counts_serial(std::span<const double> probs,
                                                std::uint64_t shots,
                                                std::uint64_t seed,
                                                std::uint64_t stream) {
  const std::vector<double> cdf = cumulative_distribution(probs);
  std::vector<std::uint64_t> counts(probs.size(), 0);
  for (std::uint64_t t = 0; t < shots; ++t) {
    ++counts[categorical_index(cdf, uniform01(seed, stream, t))];
  }
  return counts;
}

std::vector<std::uint64_t> sample_counts_parallel(std::span<const double> probs,
                                                  std::uint64_t shots,
                                                  std::uint64_t seed,
                                                  std::uint64_t stream) {
  const std::vector<double> cdf = cumulative_distribution(probs);
  const std::size_t k = probs.size();
  std::vector<std::uint64_t> counts(k, 0);

#ifdef _OPENMP
  const std::int64_t n = static_cast<std::int64_t>(shots);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(k, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < n; ++t) {
      ++local[categorical_index(cdf, uniform01(seed, stream,
                                               static_cast<std::uint64_t>(t)))];
    }
#pragma omp critical
    for (std::size_t j = 0; j < k; ++j) counts[j] += local[j];
  }
#else
  for (std::uint64_t t = 0; t < shots; ++t) {
    ++counts[categorical_index(cdf, uniform01(seed, stream, t))];
  }
#endif
  return counts;
}

}  // namespace qmeter
