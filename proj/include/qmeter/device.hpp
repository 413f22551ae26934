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

#include "qmeter/quantum_core.hpp"
#include "qmeter/states.hpp"

namespace qmeter {

enum class DeviceKind { ideal, imperfect, disturbing, generic };

std::string to_string(DeviceKind kind);
DeviceKind device_kind_from_string(const std::string& text);

struct ValidationReport {
  bool ok = false;
  double max_deviation = 0.0;  // max |Gram - I| entry over response columns
};

/// A measuring apparatus characterized by its response tensor gamma(i, j, k):
/// feeding eigenstate k produces the composite amplitude matrix
/// response(k)(i, j) over system index i and pointer index j.
///
/// Physical devices are isometries: distinct responses are orthonormal under
/// the flattened inner product. Construction enforces this within kPhysTol
/// unless `unchecked` is set, in which case the tensor is stored as-is and
/// every report derived from the device marks it unphysical.
class MeasurementDevice {
 public:
  MeasurementDevice(std::string name, DeviceKind kind,
                    std::vector<Matrix> responses, bool unchecked = false);

  Eigen::Index n() const { return static_cast<Eigen::Index>(responses_.size()); }
  Eigen::Index m() const { return responses_.front().cols(); }

  /// gamma(i, j, k): amplitude on |a_i p_j> for input eigenstate k.
  Complex gamma(Eigen::Index i, Eigen::Index j, Eigen::Index k) const;

  const Matrix& response(Eigen::Index k) const;
  const std::vector<Matrix>& responses() const { return responses_; }

  const std::string& name() const { return name_; }
  DeviceKind kind() const { return kind_; }
  bool unchecked() const { return unchecked_; }

  MeasurementDevice renamed(std::string name) const;

 private:
  std::string name_;
  DeviceKind kind_;
  std::vector<Matrix> responses_;
  bool unchecked_ = false;
};

/// Perfect correlation: gamma(i, j, k) = 1 iff i == j == k.
MeasurementDevice make_ideal(Eigen::Index n);

/// Pointer scatter without system disturbance:
/// gamma(i, j, k) = cross(k, j) when i == k, else 0.
/// Rows of `cross` must be normalized.
MeasurementDevice make_imperfect(Eigen::Index n, const Matrix& cross);

/// Perfect pointer tracking with system disturbance:
/// gamma(i, j, k) = disturbed[k](i) when j == k, else 0.
/// The disturbed vectors must be normalized but need not be orthogonal.
MeasurementDevice make_disturbing(Eigen::Index n,
                                  const std::vector<Vector>& disturbed);

/// Generic device from the interaction's response columns: columns[k] is the
/// flattened (row-major over (i, j)) composite output for input k, length
/// n * m. Columns must be pairwise orthonormal within kPhysTol.
MeasurementDevice from_unitary(Eigen::Index n, Eigen::Index m,
                               const std::vector<Vector>& columns);

ValidationReport validate_device(const MeasurementDevice& dev);

/// beta(i, j) = sum_k alpha_k * gamma(i, j, k). Requires a physical device.
BipartiteState apply_device(const MeasurementDevice& dev,
                            const PureState& input);

/// Pr(p_j) = sum_i |beta(i, j)|^2, aligned with the state's pointer labels.
std::vector<double> pointer_distribution(const BipartiteState& state);

struct MhiReliability {
  std::vector<double> ratios;  // per pointer outcome; +inf when the diagonal
                               // amplitude vanishes on a live column
  bool reliable = false;
  double delta = kDefaultDelta;
};

/// Off-diagonal-mass ratios per outcome: ratio_i = sum_{n != i} |beta(n, i)|^2
/// divided by |beta(i, i)|^2. Reliable iff every ratio <= delta. An all-zero
/// column contributes ratio 0 (the outcome never fires). Square states only.
MhiReliability mhi_reliability(const BipartiteState& state,
                               double delta = kDefaultDelta);

}  // namespace qmeter
