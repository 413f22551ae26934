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

#include "qmeter/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qmeter/errors.hpp"
#include "qmeter/rng.hpp"
#include "qmeter/sampling.hpp"

namespace qmeter {

namespace {

void require_physical(const MeasurementDevice& dev, const char* op) {
  if (!dev.unchecked()) return;
  const ValidationReport report = validate_device(dev);
  if (!report.ok) {
    throw NotAnIsometry(std::string(op) + ": device '" + dev.name() +
                            "' is not an isometry",
                        report.max_deviation);
  }
}

}  // namespace

ChannelMatrix::ChannelMatrix(Eigen::MatrixXd probs)
    : ChannelMatrix(std::move(probs), {}, {}) {}

ChannelMatrix::ChannelMatrix(Eigen::MatrixXd probs,
                             std::vector<std::string> input_labels,
                             std::vector<std::string> output_labels)
    : probs_(std::move(probs)),
      input_labels_(std::move(input_labels)),
      output_labels_(std::move(output_labels)) {
  if (probs_.rows() < 1 || probs_.cols() < 1) {
    throw InvalidDimension("ChannelMatrix: must have at least one row and column");
  }
  if (input_labels_.empty()) input_labels_ = default_labels('a', probs_.rows());
  if (output_labels_.empty()) output_labels_ = default_labels('p', probs_.cols());
  if (static_cast<Eigen::Index>(input_labels_.size()) != probs_.rows() ||
      static_cast<Eigen::Index>(output_labels_.size()) != probs_.cols()) {
    throw DimensionError("ChannelMatrix: label count mismatch");
  }
  for (Eigen::Index k = 0; k < probs_.rows(); ++k) {
    double row_sum = 0.0;
    for (Eigen::Index j = 0; j < probs_.cols(); ++j) {
      const double p = probs_(k, j);
      if (p < -kNormTol || p > 1.0 + kNormTol) {
        throw InvalidState("ChannelMatrix: entry (" + std::to_string(k) + ", " +
                           std::to_string(j) + ") = " + std::to_string(p) +
                           " outside [0, 1]");
      }
      row_sum += p;
    }
    if (std::abs(row_sum - 1.0) > kNormTol) {
      throw InvalidState("ChannelMatrix: row " + std::to_string(k) +
                         " sums to " + std::to_string(row_sum));
    }
  }
}

ChannelMatrix exact_channel(const MeasurementDevice& dev) {
  require_physical(dev, "exact_channel");
  Eigen::MatrixXd probs(dev.n(), dev.m());
  for (Eigen::Index k = 0; k < dev.n(); ++k) {
    const Matrix& response = dev.response(k);
    for (Eigen::Index j = 0; j < dev.m(); ++j) {
      probs(k, j) = response.col(j).squaredNorm();
    }
  }
  return ChannelMatrix(std::move(probs));
}

std::string sample_pointer(const MeasurementDevice& dev, const PureState& input,
                           std::uint64_t seed) {
  const BipartiteState after = apply_device(dev, input);
  const std::vector<double> probs = pointer_distribution(after);
  const std::vector<double> cdf = cumulative_distribution(probs);
  const std::size_t j = categorical_index(cdf, uniform01(seed, 0, 0));
  return after.pointer_labels()[j];
}

CalibrationReport estimate_channel(const MeasurementDevice& dev,
                                   std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw InvalidArgument("estimate_channel: shots must be >= 1");
  }
  ChannelMatrix exact = exact_channel(dev);

  CountMatrix counts(dev.n(), dev.m());
  Eigen::MatrixXd estimated(dev.n(), dev.m());
  for (Eigen::Index k = 0; k < dev.n(); ++k) {
    std::vector<double> row(static_cast<std::size_t>(dev.m()));
    for (Eigen::Index j = 0; j < dev.m(); ++j) {
      row[static_cast<std::size_t>(j)] = exact.probs()(k, j);
    }
    const std::vector<std::uint64_t> tallies = sample_counts_parallel(
        row, shots, seed, static_cast<std::uint64_t>(k));
    for (Eigen::Index j = 0; j < dev.m(); ++j) {
      counts(k, j) = tallies[static_cast<std::size_t>(j)];
      estimated(k, j) =
          static_cast<double>(tallies[static_cast<std::size_t>(j)]) /
          static_cast<double>(shots);
    }
  }

  ChannelMatrix estimated_channel(std::move(estimated), exact.input_labels(),
                                  exact.output_labels());
  const double max_abs_error =
      (exact.probs() - estimated_channel.probs()).cwiseAbs().maxCoeff();
  return CalibrationReport{std::move(exact), std::move(estimated_channel),
                           std::move(counts), shots, seed, max_abs_error};
}

std::vector<double> frequency_measurement(const MeasurementDevice& dev,
                                          const PureState& input,
                                          std::uint64_t shots,
                                          std::uint64_t seed) {
  if (shots < 1) {
    throw InvalidArgument("frequency_measurement: shots must be >= 1");
  }
  const BipartiteState after = apply_device(dev, input);
  const std::vector<double> probs = pointer_distribution(after);
  const std::vector<std::uint64_t> tallies =
      sample_counts_parallel(probs, shots, seed, 0);
  std::vector<double> frequencies(tallies.size());
  for (std::size_t j = 0; j < tallies.size(); ++j) {
    frequencies[j] =
        static_cast<double>(tallies[j]) / static_cast<double>(shots);
  }
  return frequencies;
}

std::vector<double> classical_prediction(const ChannelMatrix& ch,
                                         std::span<const double> source_dist) {
  if (static_cast<Eigen::Index>(source_dist.size()) != ch.n()) {
    throw DimensionError("classical_prediction: source length " +
                         std::to_string(source_dist.size()) +
                         " does not match channel inputs " +
                         std::to_string(ch.n()));
  }
  std::vector<double> out(static_cast<std::size_t>(ch.m()), 0.0);
  for (Eigen::Index k = 0; k < ch.n(); ++k) {
    for (Eigen::Index j = 0; j < ch.m(); ++j) {
      out[static_cast<std::size_t>(j)] +=
          source_dist[static_cast<std::size_t>(k)] * ch.probs()(k, j);
    }
  }
  return out;
}

double interference_gap(const MeasurementDevice& dev, const PureState& input) {
  const std::vector<double> quantum =
      pointer_distribution(apply_device(dev, input));
  std::vector<double> source(static_cast<std::size_t>(input.dim()));
  for (Eigen::Index k = 0; k < input.dim(); ++k) {
    source[static_cast<std::size_t>(k)] = std::norm(input.amplitudes()(k));
  }
  const std::vector<double> classical =
      classical_prediction(exact_channel(dev), source);
  double gap = 0.0;
  for (std::size_t j = 0; j < quantum.size(); ++j) {
    gap = std::max(gap, std::abs(quantum[j] - classical[j]));
  }
  return gap;
}

}  // namespace qmeter
