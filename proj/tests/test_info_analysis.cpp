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

#include <cmath>
#include <doctest.h>

#include "qmeter/errors.hpp"
#include "test_helpers.hpp"

using namespace qmeter;
using qmeter::testing::random_channel_probs;
using qmeter::testing::random_distribution;

namespace {

// binary entropy of 0.1, computed independently
constexpr double kH01 = 0.4689955935892812;

ChannelMatrix bsc(double q) {
  Eigen::MatrixXd probs(2, 2);
  probs << 1.0 - q, q, q, 1.0 - q;
  return ChannelMatrix(probs);
}

ChannelMatrix constant_rows(const std::vector<double>& row, Eigen::Index n) {
  Eigen::MatrixXd probs(n, static_cast<Eigen::Index>(row.size()));
  for (Eigen::Index k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      probs(k, static_cast<Eigen::Index>(j)) = row[j];
    }
  }
  return ChannelMatrix(probs);
}

}  // namespace

TEST_CASE("surprisal") {
  CHECK(surprisal(1.0) == 0.0);
  CHECK(surprisal(0.5) == 1.0);
  CHECK(surprisal(0.25) == 2.0);
  CHECK_THROWS_AS(surprisal(0.0), DomainError);
  CHECK_THROWS_AS(surprisal(-0.1), DomainError);
  CHECK_THROWS_AS(surprisal(1.1), DomainError);
}

TEST_CASE("entropy") {
  CHECK(entropy(SourceDistribution::uniform(4)) == doctest::Approx(2.0));
  CHECK(entropy(SourceDistribution({1.0, 0.0, 0.0})) == 0.0);
  CHECK(std::abs(entropy(SourceDistribution({0.9, 0.1})) - kH01) < 1e-12);
}

TEST_CASE("joint_distribution") {
  SUBCASE("identity channel with a uniform source is diagonal") {
    const auto joint =
        joint_distribution(SourceDistribution::uniform(2), bsc(0.0));
    CHECK(joint.joint()(0, 0) == 0.5);
    CHECK(joint.joint()(1, 1) == 0.5);
    CHECK(joint.joint()(0, 1) == 0.0);
  }

  SUBCASE("symmetric binary channel with uniform source") {
    const auto joint =
        joint_distribution(SourceDistribution::uniform(2), bsc(0.1));
    CHECK(std::abs(joint.joint()(0, 0) - 0.45) < 1e-15);
    CHECK(std::abs(joint.joint()(0, 1) - 0.05) < 1e-15);
    CHECK(std::abs(joint.joint()(1, 0) - 0.05) < 1e-15);
    CHECK(std::abs(joint.joint()(1, 1) - 0.45) < 1e-15);
  }

  SUBCASE("marginals recover the source and destination") {
    std::mt19937_64 rng(101);
    const SourceDistribution source(random_distribution(3, rng));
    const ChannelMatrix ch(random_channel_probs(3, 4, rng));
    const auto joint = joint_distribution(source, ch);
    const auto src_marginal = joint.source_marginal();
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(std::abs(src_marginal[i] - source.probs()[i]) < 1e-12);
    }
    double total = 0.0;
    for (double p : joint.destination_marginal()) total += p;
    CHECK(std::abs(total - 1.0) < 1e-12);
  }

  SUBCASE("size mismatch") {
    CHECK_THROWS_AS(joint_distribution(SourceDistribution::uniform(3), bsc(0.1)),
                    DimensionError);
  }
}

TEST_CASE("equivocation and noise") {
  SUBCASE("identity channel loses nothing") {
    std::mt19937_64 rng(103);
    const SourceDistribution source(random_distribution(4, rng));
    const auto joint =
        joint_distribution(source, exact_channel(make_ideal(4)));
    CHECK(equivocation(joint) < 1e-12);
    CHECK(noise(joint) < 1e-12);
  }

  SUBCASE("independent source and destination maximize both") {
    std::mt19937_64 rng(107);
    const SourceDistribution source(random_distribution(3, rng));
    const std::vector<double> row{0.2, 0.3, 0.5};
    const auto joint = joint_distribution(source, constant_rows(row, 3));
    CHECK(std::abs(equivocation(joint) - entropy(source)) < 1e-12);
    CHECK(std::abs(noise(joint) - entropy(SourceDistribution(row))) < 1e-12);
    CHECK(mutual_information(joint) < 1e-12);
  }

  SUBCASE("symmetric binary channel at the uniform source") {
    const auto joint =
        joint_distribution(SourceDistribution::uniform(2), bsc(0.1));
    CHECK(std::abs(equivocation(joint) - kH01) < 1e-12);
    CHECK(std::abs(noise(joint) - kH01) < 1e-12);
    CHECK(std::abs(mutual_information(joint) - (1.0 - kH01)) < 1e-12);
  }
}

TEST_CASE("mutual information identity holds on random inputs") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 15);
    const Eigen::Index m = 2 + static_cast<Eigen::Index>(rng() % 15);
    const SourceDistribution source(
        random_distribution(static_cast<std::size_t>(n), rng));
    const ChannelMatrix ch(random_channel_probs(n, m, rng));
    const auto joint = joint_distribution(source, ch);
    const double h_s = entropy(source);
    const double h_d = entropy(SourceDistribution(joint.destination_marginal()));
    const double mutual = mutual_information(joint);
    CHECK(std::abs((h_s - equivocation(joint)) - (h_d - noise(joint))) < 1e-10);
    CHECK(mutual >= 0.0);
    CHECK(mutual <= std::min(h_s, h_d) + 1e-10);
    CHECK(equivocation(joint) <= h_s + 1e-10);
    CHECK(noise(joint) <= h_d + 1e-10);
  }
}

TEST_CASE("joint entropy differs from mutual information off the extremes") {
  const auto joint = joint_distribution(SourceDistribution::uniform(2), bsc(0.1));
  const double h_joint = joint_entropy(joint);
  // H(S,D) = H(S) + N here: 1 + h(0.1)
  CHECK(std::abs(h_joint - (1.0 + kH01)) < 1e-12);
  CHECK(h_joint != doctest::Approx(mutual_information(joint)));
}

TEST_CASE("reliability_index") {
  SUBCASE("identity channel scores 1") {
    CHECK(std::abs(reliability_index(exact_channel(make_ideal(4))) - 1.0) <
          1e-12);
  }

  SUBCASE("constant rows score 0") {
    CHECK(reliability_index(constant_rows({0.25, 0.75}, 2)) < 1e-12);
  }

  SUBCASE("symmetric binary channel scores one minus the binary entropy") {
    CHECK(std::abs(reliability_index(bsc(0.1)) - (1.0 - kH01)) < 1e-12);
  }

  SUBCASE("single-input channels are rejected") {
    Eigen::MatrixXd one(1, 2);
    one << 0.5, 0.5;
    CHECK_THROWS_AS(reliability_index(ChannelMatrix(one)), DomainError);
  }

  SUBCASE("invariant under simultaneous relabeling") {
    std::mt19937_64 rng(113);
    Eigen::MatrixXd probs = random_channel_probs(4, 4, rng);
    Eigen::MatrixXd permuted(4, 4);
    const int perm[4] = {2, 0, 3, 1};
    for (int k = 0; k < 4; ++k) {
      for (int j = 0; j < 4; ++j) {
        permuted(perm[k], perm[j]) = probs(k, j);
      }
    }
    CHECK(std::abs(reliability_index(ChannelMatrix(probs)) -
                   reliability_index(ChannelMatrix(permuted))) < 1e-12);
  }
}

TEST_CASE("classify_channel") {
  const SourceDistribution uniform = SourceDistribution::uniform(2);

  SUBCASE("identity is deterministic") {
    CHECK(classify_channel(bsc(0.0), uniform) == ChannelClass::deterministic);
  }

  SUBCASE("symmetric binary channel is noisy and equivocal") {
    CHECK(classify_channel(bsc(0.1), uniform) ==
          ChannelClass::noisy_and_equivocal);
  }

  SUBCASE("classification can depend on the source") {
    Eigen::MatrixXd probs(2, 2);
    probs << 1.0, 0.0, 0.5, 0.5;
    const ChannelMatrix ch(probs);
    CHECK(classify_channel(ch, uniform) == ChannelClass::noisy_and_equivocal);
    CHECK(classify_channel(ch, SourceDistribution({1.0, 0.0})) ==
          ChannelClass::deterministic);
  }

  SUBCASE("deterministic but lossy channels are purely equivocal") {
    // two inputs mapped to the same output
    Eigen::MatrixXd probs(2, 2);
    probs << 1.0, 0.0, 1.0, 0.0;
    CHECK(classify_channel(ChannelMatrix(probs), uniform) ==
          ChannelClass::equivocal);
  }
}

TEST_CASE("channel_reliable") {
  SUBCASE("identity is reliable at any cut") {
    CHECK(channel_reliable(bsc(0.0), 0.0));
    CHECK(channel_reliable(bsc(0.0), 0.5));
  }

  SUBCASE("threshold splits the symmetric family") {
    CHECK_FALSE(channel_reliable(bsc(0.1), 0.05));
    CHECK(channel_reliable(bsc(0.1), 0.15));
  }

  SUBCASE("rectangular channels are rejected") {
    Eigen::MatrixXd probs(2, 3);
    probs << 1.0, 0.0, 0.0, 0.0, 1.0, 0.0;
    CHECK_THROWS_AS(channel_reliable(ChannelMatrix(probs), 0.1), ShapeError);
  }
}

TEST_CASE("analyze composes the full pipeline") {
  SUBCASE("ideal device") {
    const auto report = analyze(make_ideal(4));
    CHECK(std::abs(report.source_entropy - 2.0) < 1e-12);
    CHECK(std::abs(report.destination_entropy - 2.0) < 1e-12);
    CHECK(report.equivocation < 1e-12);
    CHECK(report.noise < 1e-12);
    CHECK(std::abs(report.reliability_index - 1.0) < 1e-12);
    CHECK(report.classification == ChannelClass::deterministic);
    CHECK(report.channel_reliable);
  }

  SUBCASE("symmetric imperfect device") {
    Matrix cross(2, 2);
    cross << std::sqrt(0.9), std::sqrt(0.1), std::sqrt(0.1), std::sqrt(0.9);
    const auto report = analyze(make_imperfect(2, cross), 0.05);
    CHECK(std::abs(report.reliability_index - (1.0 - kH01)) < 1e-12);
    CHECK(report.classification == ChannelClass::noisy_and_equivocal);
    CHECK_FALSE(report.channel_reliable);
    // identity between the two mutual-information routes
    CHECK(std::abs((report.source_entropy - report.equivocation) -
                   (report.destination_entropy - report.noise)) < 1e-12);
  }

  SUBCASE("reliability decreases with the crossover") {
    auto crossover_device = [](double q) {
      Matrix cross(2, 2);
      cross << std::sqrt(1 - q), std::sqrt(q), std::sqrt(q), std::sqrt(1 - q);
      return make_imperfect(2, cross);
    };
    const double r_low = analyze(crossover_device(0.05)).reliability_index;
    const double r_high = analyze(crossover_device(0.2)).reliability_index;
    CHECK(r_low > r_high);
  }
}

TEST_CASE("distributions with exact zeros and ones stay finite") {
  std::mt19937_64 rng(127);
  Eigen::MatrixXd probs(3, 3);
  probs << 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.5, 0.0, 0.5;
  const ChannelMatrix ch(probs);
  const SourceDistribution source({0.5, 0.0, 0.5});
  const auto joint = joint_distribution(source, ch);
  const double e = equivocation(joint);
  const double n = noise(joint);
  const double mutual = mutual_information(joint);
  CHECK(std::isfinite(e));
  CHECK(std::isfinite(n));
  CHECK(std::isfinite(mutual));
  CHECK(std::isfinite(joint_entropy(joint)));
  CHECK(std::isfinite(reliability_index(ch)));
}
