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

#include "qmeter/calibration.hpp"

namespace qmeter {

/// Probability vector over labeled source letters. Entries in [0, 1],
/// summing to 1 within kNormTol.
class SourceDistribution {
 public:
  explicit SourceDistribution(std::vector<double> probs);
  SourceDistribution(std::vector<double> probs,
                     std::vector<std::string> labels);

  static SourceDistribution uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<double> probs_;
  std::vector<std::string> labels_;
};

/// Joint probability matrix joint(i, j) = p(source i, destination j).
class JointDistribution {
 public:
  explicit JointDistribution(Eigen::MatrixXd joint);
  JointDistribution(Eigen::MatrixXd joint,
                    std::vector<std::string> source_labels,
                    std::vector<std::string> destination_labels);

  const Eigen::MatrixXd& joint() const { return joint_; }
  std::vector<double> source_marginal() const;
  std::vector<double> destination_marginal() const;
  const std::vector<std::string>& source_labels() const { return source_labels_; }
  const std::vector<std::string>& destination_labels() const {
    return destination_labels_;
  }

 private:
  Eigen::MatrixXd joint_;
  std::vector<std::string> source_labels_;
  std::vector<std::string> destination_labels_;
};

enum class ChannelClass { deterministic, noisy, equivocal, noisy_and_equivocal };

std::string to_string(ChannelClass c);
ChannelClass channel_class_from_string(const std::string& text);

struct InfoReport {
  double source_entropy = 0.0;       // H(S), bits
  double destination_entropy = 0.0;  // H(D), bits
  double equivocation = 0.0;         // E = H(S|D), bits
  double noise = 0.0;                // N = H(D|S), bits
  double mutual_information = 0.0;   // H(S;D), bits
  double joint_entropy = 0.0;        // H(S,D) diagnostic, bits
  double reliability_index = 0.0;    // H(S;D) / log2 n at the uniform source
  ChannelClass classification = ChannelClass::deterministic;
  bool channel_reliable = false;
  double epsilon = kDefaultEpsilon;
  double epsilon_bits = kDefaultEpsilonBits;
};

/// -log2(p) for p in (0, 1].
double surprisal(double p);

/// -sum p log2 p with 0 log 0 := 0.
double entropy(const SourceDistribution& dist);

JointDistribution joint_distribution(const SourceDistribution& source,
                                     const ChannelMatrix& ch);

/// H(S|D): information generated at the source but lost before the
/// destination. Zero-probability destination columns contribute 0.
double equivocation(const JointDistribution& joint);

/// H(D|S): spurious information at the destination.
double noise(const JointDistribution& joint);

/// Evaluates both H(S) - E and H(D) - N; throws NumericalInconsistency if
/// they disagree beyond kNormTol. Tiny negatives are clamped to 0.
double mutual_information(const JointDistribution& joint);

/// -sum p(i, j) log2 p(i, j).
double joint_entropy(const JointDistribution& joint);

/// Mutual information at the equiprobable source, normalized by log2 n.
/// 1 for the identity channel, 0 for a source-independent one.
double reliability_index(const ChannelMatrix& ch);

ChannelClass classify_channel(const ChannelMatrix& ch,
                              const SourceDistribution& source,
                              double epsilon_bits = kDefaultEpsilonBits);

/// State-independent triviality test: max |probs(k, j) - delta_jk| <= epsilon.
/// Square channels only.
bool channel_reliable(const ChannelMatrix& ch, double epsilon = kDefaultEpsilon);

InfoReport analyze_channel(const ChannelMatrix& ch,
                           double epsilon = kDefaultEpsilon,
                           double epsilon_bits = kDefaultEpsilonBits);

/// Full pipeline: exact channel, equiprobable source, Shannon quantities,
/// classification, reliability.
InfoReport analyze(const MeasurementDevice& dev,
                   double epsilon = kDefaultEpsilon,
                   double epsilon_bits = kDefaultEpsilonBits);

}  // namespace qmeter
