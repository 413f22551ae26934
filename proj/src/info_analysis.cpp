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

#include "qmeter/info_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qmeter/errors.hpp"

namespace qmeter {

namespace {

double entropy_of(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

SourceDistribution::SourceDistribution(std::vector<double> probs)
    : SourceDistribution(std::move(probs), {}) {}

SourceDistribution::SourceDistribution(std::vector<double> probs,
                                       std::vector<std::string> labels)
    : probs_(std::move(probs)), labels_(std::move(labels)) {
  if (probs_.empty()) {
    throw InvalidDimension("SourceDistribution: must have at least one letter");
  }
  if (labels_.empty()) {
    labels_ = default_labels('s', static_cast<Eigen::Index>(probs_.size()));
  }
  if (labels_.size() != probs_.size()) {
    throw DimensionError("SourceDistribution: label count mismatch");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (p < -kNormTol || p > 1.0 + kNormTol) {
      throw InvalidState("SourceDistribution: probability " +
                         std::to_string(p) + " outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTol) {
    throw InvalidState("SourceDistribution: probabilities sum to " +
                       std::to_string(total));
  }
}

SourceDistribution SourceDistribution::uniform(std::size_t n) {
  if (n < 1) {
    throw InvalidDimension("SourceDistribution::uniform: n must be >= 1");
  }
  return SourceDistribution(
      std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

JointDistribution::JointDistribution(Eigen::MatrixXd joint)
    : JointDistribution(std::move(joint), {}, {}) {}

JointDistribution::JointDistribution(Eigen::MatrixXd joint,
                                     std::vector<std::string> source_labels,
                                     std::vector<std::string> destination_labels)
    : joint_(std::move(joint)),
      source_labels_(std::move(source_labels)),
      destination_labels_(std::move(destination_labels)) {
  if (joint_.rows() < 1 || joint_.cols() < 1) {
    throw InvalidDimension("JointDistribution: must be at least 1 x 1");
  }
  if (source_labels_.empty()) source_labels_ = default_labels('s', joint_.rows());
  if (destination_labels_.empty()) {
    destination_labels_ = default_labels('d', joint_.cols());
  }
  if (static_cast<Eigen::Index>(source_labels_.size()) != joint_.rows() ||
      static_cast<Eigen::Index>(destination_labels_.size()) != joint_.cols()) {
    throw DimensionError("JointDistribution: label count mismatch");
  }
  if (joint_.minCoeff() < -kNormTol) {
    throw InvalidState("JointDistribution: negative probability entry");
  }
  const double total = joint_.sum();
  if (std::abs(total - 1.0) > kNormTol) {
    throw InvalidState("JointDistribution: entries sum to " +
                       std::to_string(total));
  }
}

std::vector<double> JointDistribution::source_marginal() const {
  std::vector<double> marginal(static_cast<std::size_t>(joint_.rows()));
  for (Eigen::Index i = 0; i < joint_.rows(); ++i) {
    marginal[static_cast<std::size_t>(i)] = joint_.row(i).sum();
  }
  return marginal;
}

std::vector<double> JointDistribution::destination_marginal() const {
  std::vector<double> marginal(static_cast<std::size_t>(joint_.cols()));
  for (Eigen::Index j = 0; j < joint_.cols(); ++j) {
    marginal[static_cast<std::size_t>(j)] = joint_.col(j).sum();
  }
  return marginal;
}

std::string to_string(ChannelClass c) {
  switch (c) {
    case ChannelClass::deterministic: return "deterministic";
    case ChannelClass::noisy: return "noisy";
    case ChannelClass::equivocal: return "equivocal";
    case ChannelClass::noisy_and_equivocal: return "noisy_and_equivocal";
  }
  return "deterministic";
}

ChannelClass channel_class_from_string(const std::string& text) {
  if (text == "deterministic") return ChannelClass::deterministic;
  if (text == "noisy") return ChannelClass::noisy;
  if (text == "equivocal") return ChannelClass::equivocal;
  if (text == "noisy_and_equivocal") return ChannelClass::noisy_and_equivocal;
  throw InvalidArgument("unknown channel class: " + text);
}

double surprisal(double p) {
  if (p <= 0.0 || p > 1.0) {
    throw DomainError("surprisal: probability must lie in (0, 1], got " +
                      std::to_string(p));
  }
  return -std::log2(p);
}

double entropy(const SourceDistribution& dist) { return entropy_of(dist.probs()); }

JointDistribution joint_distribution(const SourceDistribution& source,
                                     const ChannelMatrix& ch) {
  if (static_cast<Eigen::Index>(source.size()) != ch.n()) {
    throw DimensionError("joint_distribution: source size " +
                         std::to_string(source.size()) +
                         " does not match channel inputs " +
                         std::to_string(ch.n()));
  }
  Eigen::MatrixXd joint(ch.n(), ch.m());
  for (Eigen::Index i = 0; i < ch.n(); ++i) {
    joint.row(i) = source.probs()[static_cast<std::size_t>(i)] * ch.probs().row(i);
  }
  return JointDistribution(std::move(joint), source.labels(),
                           ch.output_labels());
}

double equivocation(const JointDistribution& joint) {
  const Eigen::MatrixXd& p = joint.joint();
  const std::vector<double> dest = joint.destination_marginal();
  double e = 0.0;
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    const double pd = dest[static_cast<std::size_t>(j)];
    if (pd <= 0.0) continue;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      const double pij = p(i, j);
      if (pij > 0.0) e -= pij * std::log2(pij / pd);
    }
  }
  return std::max(0.0, e);
}

double noise(const JointDistribution& joint) {
  const Eigen::MatrixXd& p = joint.joint();
  const std::vector<double> source = joint.source_marginal();
  double n = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    const double ps = source[static_cast<std::size_t>(i)];
    if (ps <= 0.0) continue;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      const double pij = p(i, j);
      if (pij > 0.0) n -= pij * std::log2(pij / ps);
    }
  }
  return std::max(0.0, n);
}

double mutual_information(const JointDistribution& joint) {
  const double h_source = entropy_of(joint.source_marginal());
  const double h_dest = entropy_of(joint.destination_marginal());
  const double via_source = h_source - equivocation(joint);
  const double via_dest = h_dest - noise(joint);
  if (std::abs(via_source - via_dest) > kNormTol) {
    throw NumericalInconsistency(
        "mutual_information: H(S) - E = " + std::to_string(via_source) +
        " disagrees with H(D) - N = " + std::to_string(via_dest));
  }
  return std::max(0.0, via_source);
}

double joint_entropy(const JointDistribution& joint) {
  const Eigen::MatrixXd& p = joint.joint();
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (p(i, j) > 0.0) h -= p(i, j) * std::log2(p(i, j));
    }
  }
  return h;
}

double reliability_index(const ChannelMatrix& ch) {
  if (ch.n() < 2) {
    throw DomainError("reliability_index: needs at least two inputs");
  }
  const SourceDistribution source =
      SourceDistribution::uniform(static_cast<std::size_t>(ch.n()));
  const double mutual = mutual_information(joint_distribution(source, ch));
  return mutual / std::log2(static_cast<double>(ch.n()));
}

ChannelClass classify_channel(const ChannelMatrix& ch,
                              const SourceDistribution& source,
                              double epsilon_bits) {
  const JointDistribution joint = joint_distribution(source, ch);
  const bool is_equivocal = equivocation(joint) > epsilon_bits;
  const bool is_noisy = noise(joint) > epsilon_bits;
  if (is_noisy && is_equivocal) return ChannelClass::noisy_and_equivocal;
  if (is_noisy) return ChannelClass::noisy;
  if (is_equivocal) return ChannelClass::equivocal;
  return ChannelClass::deterministic;
}

bool channel_reliable(const ChannelMatrix& ch, double epsilon) {
  if (ch.n() != ch.m()) {
    throw ShapeError("channel_reliable: requires a square channel, got " +
                     std::to_string(ch.n()) + " x " + std::to_string(ch.m()));
  }
  double deviation = 0.0;
  for (Eigen::Index k = 0; k < ch.n(); ++k) {
    for (Eigen::Index j = 0; j < ch.m(); ++j) {
      const double target = (j == k) ? 1.0 : 0.0;
      deviation = std::max(deviation, std::abs(ch.probs()(k, j) - target));
    }
  }
  return deviation <= epsilon;
}

InfoReport analyze_channel(const ChannelMatrix& ch, double epsilon,
                           double epsilon_bits) {
  const SourceDistribution source =
      SourceDistribution::uniform(static_cast<std::size_t>(ch.n()));
  const JointDistribution joint = joint_distribution(source, ch);

  InfoReport report;
  report.source_entropy = entropy_of(joint.source_marginal());
  report.destination_entropy = entropy_of(joint.destination_marginal());
  report.equivocation = equivocation(joint);
  report.noise = noise(joint);
  report.mutual_information = mutual_information(joint);
  report.joint_entropy = joint_entropy(joint);
  report.reliability_index = reliability_index(ch);
  report.classification = classify_channel(ch, source, epsilon_bits);
  report.channel_reliable = channel_reliable(ch, epsilon);
  report.epsilon = epsilon;
  report.epsilon_bits = epsilon_bits;
  return report;
}

InfoReport analyze(const MeasurementDevice& dev, double epsilon,
                   double epsilon_bits) {
  return analyze_channel(exact_channel(dev), epsilon, epsilon_bits);
}

}  // namespace qmeter
