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
#include <string>
#include <vector>

#include "qmeter/device.hpp"

namespace qmeter {

using CountMatrix =
    Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Row-stochastic conditional-probability matrix probs(k, j) = Pr(outcome j
/// given input k). Rows sum to 1 within kNormTol; entries lie in [0, 1].
class ChannelMatrix {
 public:
  explicit ChannelMatrix(Eigen::MatrixXd probs);
  ChannelMatrix(Eigen::MatrixXd probs, std::vector<std::string> input_labels,
                std::vector<std::string> output_labels);

  Eigen::Index n() const { return probs_.rows(); }
  Eigen::Index m() const { return probs_.cols(); }
  const Eigen::MatrixXd& probs() const { return probs_; }
  const std::vector<std::string>& input_labels() const { return input_labels_; }
  const std::vector<std::string>& output_labels() const { return output_labels_; }

 private:
  Eigen::MatrixXd probs_;
  std::vector<std::string> input_labels_;
  std::vector<std::string> output_labels_;
};

struct CalibrationReport {
  ChannelMatrix exact;
  ChannelMatrix estimated;
  CountMatrix counts;  // raw outcome tallies, rows sum to shots_per_input
  std::uint64_t shots_per_input = 0;
  std::uint64_t seed = 0;
  double max_abs_error = 0.0;  // max entrywise |exact - estimated|
};

/// probs(k, j) = sum_i |gamma(i, j, k)|^2. Requires a physical device.
ChannelMatrix exact_channel(const MeasurementDevice& dev);

/// One registered pointer reading, drawn from the device's outcome
/// distribution for `input`. Deterministic in the seed.
std::string sample_pointer(const MeasurementDevice& dev, const PureState& input,
                           std::uint64_t seed);

/// Feeds each input eigenstate `shots` times and tallies pointer outcomes.
/// Input k draws from stream k, shot t from counter t, so the report is
/// reproducible and independent of evaluation order.
CalibrationReport estimate_channel(const MeasurementDevice& dev,
                                   std::uint64_t shots, std::uint64_t seed);

/// Empirical outcome frequencies over `shots` repetitions on a fixed input.
std::vector<double> frequency_measurement(const MeasurementDevice& dev,
                                          const PureState& input,
                                          std::uint64_t shots,
                                          std::uint64_t seed);

/// Classical push-forward: out_j = sum_k source_dist[k] * probs(k, j).
std::vector<double> classical_prediction(const ChannelMatrix& ch,
                                         std::span<const double> source_dist);

/// Max deviation between the device's true outcome distribution on `input`
/// and the classical push-forward of |alpha_k|^2 through its channel.
/// Zero on eigenstate inputs; nonzero only when responses interfere.
double interference_gap(const MeasurementDevice& dev, const PureState& input);

}  // namespace qmeter
