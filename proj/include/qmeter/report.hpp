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

#include <optional>
#include <string>
#include <vector>

#include "qmeter/device_io.hpp"
#include "qmeter/info_analysis.hpp"
#include "qmeter/interpretation.hpp"

namespace qmeter {

enum class ReportFormat { json, csv };

struct DeviceSummary {
  std::string name;
  DeviceKind kind = DeviceKind::generic;
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  bool unchecked = false;
  ValidationReport validation;
};

struct AscriptionSummary {
  std::vector<double> kochen_dieks_probs;
  bool kochen_dieks_degenerate = false;
  std::vector<double> vermaas_dieks_probs;
  bool vermaas_dieks_degenerate = false;
  std::vector<double> collapse_probs;
  std::vector<double> pointer_basis_probs;
  PointerMisalignment misalignment;
};

/// Everything one scenario run produces. Serializes to JSON with stable key
/// order; identical scenario + seed always yields byte-identical output.
struct ScenarioReport {
  DeviceSummary device;
  std::vector<Complex> state;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  double epsilon = kDefaultEpsilon;
  double delta = kDefaultDelta;
  double epsilon_bits = kDefaultEpsilonBits;
  CalibrationReport calibration;
  InfoReport info;
  std::optional<MhiReliability> mhi;  // absent for rectangular devices
  double interference_gap = 0.0;
  std::vector<double> pointer_probs;  // outcome distribution for the state
  AscriptionSummary ascriptions;
};

ScenarioReport run_scenario(const Scenario& scenario);

std::string emit_report(const ScenarioReport& report, ReportFormat format);

/// Inverse of the JSON emitter, for archival reports.
ScenarioReport parse_report(const std::string& json_text);

/// Column header matching emit_report's CSV row.
std::string csv_header();

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace qmeter
