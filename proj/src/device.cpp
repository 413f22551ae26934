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

#include "qmeter/device.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "qmeter/errors.hpp"

namespace qmeter {

namespace {

/// Max |Gram - I| entry over the flattened response columns.
double gram_deviation(const std::vector<Matrix>& responses) {
  const std::size_t n = responses.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      const Complex inner =
          (responses[k].conjugate().cwiseProduct(responses[l])).sum();
      const double target = (k == l) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(inner - Complex(target, 0.0)));
    }
  }
  return worst;
}

}  // namespace

std::string to_string(DeviceKind kind) {
  switch (kind) {
    case DeviceKind::ideal: return "ideal";
    case DeviceKind::imperfect: return "imperfect";
    case DeviceKind::disturbing: return "disturbing";
    case DeviceKind::generic: return "generic";
  }
  return "generic";
}

DeviceKind device_kind_from_string(const std::string& text) {
  if (text == "ideal") return DeviceKind::ideal;
  if (text == "imperfect") return DeviceKind::imperfect;
  if (text == "disturbing") return DeviceKind::disturbing;
  if (text == "generic") return DeviceKind::generic;
  throw InvalidArgument("unknown device kind: " + text);
}

MeasurementDevice::MeasurementDevice(std::string name, DeviceKind kind,
                                     std::vector<Matrix> responses,
                                     bool unchecked)
    : name_(std::move(name)),
      kind_(kind),
      responses_(std::move(responses)),
      unchecked_(unchecked) {
  if (responses_.empty()) {
    throw InvalidDimension("MeasurementDevice: system dimension must be >= 1");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(responses_.size());
  const Eigen::Index m = responses_.front().cols();
  if (m < n) {
    throw InvalidDimension(
        "MeasurementDevice: pointer outcome count must be >= system dimension");
  }
  for (const Matrix& r : responses_) {
    if (r.rows() != n || r.cols() != m) {
      throw DimensionError("MeasurementDevice: inconsistent response shapes");
    }
  }
  if (!unchecked_) {
    const double dev = gram_deviation(responses_);
    if (dev > kPhysTol) {
      throw NotAnIsometry("MeasurementDevice '" + name_ +
                              "': response Gram matrix deviates from identity by " +
                              std::to_string(dev),
                          dev);
    }
  }
}

Complex MeasurementDevice::gamma(Eigen::Index i, Eigen::Index j,
                                 Eigen::Index k) const {
  if (k < 0 || k >= n() || i < 0 || i >= n() || j < 0 || j >= m()) {
    throw IndexError("gamma: index out of range");
  }
  return responses_[static_cast<std::size_t>(k)](i, j);
}

const Matrix& MeasurementDevice::response(Eigen::Index k) const {
  if (k < 0 || k >= n()) {
    throw IndexError("response: input index " + std::to_string(k) +
                     " out of range");
  }
  return responses_[static_cast<std::size_t>(k)];
}

MeasurementDevice MeasurementDevice::renamed(std::string name) const {
  MeasurementDevice copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

MeasurementDevice make_ideal(Eigen::Index n) {
  if (n < 1) {
    throw InvalidDimension("make_ideal: dimension must be >= 1");
  }
  std::vector<Matrix> responses;
  responses.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    Matrix r = Matrix::Zero(n, n);
    r(k, k) = 1.0;
    responses.push_back(std::move(r));
  }
  return MeasurementDevice("ideal-" + std::to_string(n), DeviceKind::ideal,
                           std::move(responses));
}

MeasurementDevice make_imperfect(Eigen::Index n, const Matrix& cross) {
  if (n < 1) {
    throw InvalidDimension("make_imperfect: dimension must be >= 1");
  }
  if (cross.rows() != n || cross.cols() != n) {
    throw DimensionError("make_imperfect: cross matrix must be n x n");
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double row_norm2 = cross.row(k).squaredNorm();
    if (std::abs(row_norm2 - 1.0) > kPhysTol) {
      throw InvalidDevice("make_imperfect: row " + std::to_string(k) +
                          " has squared norm " + std::to_string(row_norm2));
    }
  }
  std::vector<Matrix> responses;
  responses.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    Matrix r = Matrix::Zero(n, n);
    r.row(k) = cross.row(k);  // system stays on k, pointer scatters over j
    responses.push_back(std::move(r));
  }
  return MeasurementDevice("imperfect-" + std::to_string(n),
                           DeviceKind::imperfect, std::move(responses));
}

MeasurementDevice make_disturbing(Eigen::Index n,
                                  const std::vector<Vector>& disturbed) {
  if (n < 1) {
    throw InvalidDimension("make_disturbing: dimension must be >= 1");
  }
  if (static_cast<Eigen::Index>(disturbed.size()) != n) {
    throw DimensionError("make_disturbing: need one disturbed vector per input");
  }
  std::vector<Matrix> responses;
  responses.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const Vector& d = disturbed[static_cast<std::size_t>(k)];
    if (d.size() != n) {
      throw DimensionError("make_disturbing: disturbed vector " +
                           std::to_string(k) + " has wrong dimension");
    }
    const double norm2 = d.squaredNorm();
    if (std::abs(norm2 - 1.0) > kPhysTol) {
      throw InvalidDevice("make_disturbing: vector " + std::to_string(k) +
                          " has squared norm " + std::to_string(norm2));
    }
    Matrix r = Matrix::Zero(n, n);
    r.col(k) = d;  // pointer tracks the input index, system is disturbed
    responses.push_back(std::move(r));
  }
  return MeasurementDevice("disturbing-" + std::to_string(n),
                           DeviceKind::disturbing, std::move(responses));
}

MeasurementDevice from_unitary(Eigen::Index n, Eigen::Index m,
                               const std::vector<Vector>& columns) {
  if (n < 1 || m < n) {
    throw InvalidDimension("from_unitary: need n >= 1 and m >= n");
  }
  if (static_cast<Eigen::Index>(columns.size()) != n) {
    throw DimensionError("from_unitary: need one column per input eigenstate");
  }
  std::vector<Matrix> responses;
  responses.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const Vector& col = columns[static_cast<std::size_t>(k)];
    if (col.size() != n * m) {
      throw DimensionError("from_unitary: column " + std::to_string(k) +
                           " must have length n * m");
    }
    Matrix r(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        r(i, j) = col(i * m + j);
      }
    }
    responses.push_back(std::move(r));
  }
  return MeasurementDevice("generic-" + std::to_string(n) + "x" +
                               std::to_string(m),
                           DeviceKind::generic, std::move(responses));
}

ValidationReport validate_device(const MeasurementDevice& dev) {
  ValidationReport report;
  report.max_deviation = gram_deviation(dev.responses());
  report.ok = report.max_deviation <= kPhysTol;
  return report;
}

BipartiteState apply_device(const MeasurementDevice& dev,
                            const PureState& input) {
  if (input.dim() != dev.n()) {
    throw DimensionError("apply_device: input dimension " +
                         std::to_string(input.dim()) +
                         " does not match device dimension " +
                         std::to_string(dev.n()));
  }
  if (dev.unchecked()) {
    const ValidationReport report = validate_device(dev);
    if (!report.ok) {
      throw NotAnIsometry("apply_device: device '" + dev.name() +
                              "' is not an isometry",
                          report.max_deviation);
    }
  }
  Matrix beta = Matrix::Zero(dev.n(), dev.m());
  for (Eigen::Index k = 0; k < dev.n(); ++k) {
    beta += input.amplitudes()(k) * dev.response(k);
  }
  return BipartiteState(std::move(beta), input.basis_labels(),
                        default_labels('p', dev.m()));
}

std::vector<double> pointer_distribution(const BipartiteState& state) {
  const Matrix& beta = state.beta();
  std::vector<double> probs(static_cast<std::size_t>(beta.cols()));
  for (Eigen::Index j = 0; j < beta.cols(); ++j) {
    probs[static_cast<std::size_t>(j)] = beta.col(j).squaredNorm();
  }
  return probs;
}

MhiReliability mhi_reliability(const BipartiteState& state, double delta) {
  const Matrix& beta = state.beta();
  if (beta.rows() != beta.cols()) {
    throw ShapeError("mhi_reliability: requires a square state, got " +
                     std::to_string(beta.rows()) + " x " +
                     std::to_string(beta.cols()));
  }
  MhiReliability out;
  out.delta = delta;
  out.reliable = true;
  for (Eigen::Index i = 0; i < beta.cols(); ++i) {
    const double diagonal = std::norm(beta(i, i));
    const double off =
        std::max(0.0, beta.col(i).squaredNorm() - diagonal);
    double ratio = 0.0;
    if (diagonal > 0.0) {
      ratio = off / diagonal;
    } else if (off > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    }
    out.ratios.push_back(ratio);
    if (!(ratio <= delta)) out.reliable = false;
  }
  return out;
}

}  // namespace qmeter
