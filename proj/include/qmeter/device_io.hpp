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
#include <optional>
#include <string>
#include <vector>

#include "qmeter/device.hpp"

namespace qmeter {

// Device files are JSON objects:
//   {
//     "name": "bsc-q0.10",
//     "kind": "imperfect",
//     "n": 2,
//     "m": 2,
//     "gamma": [[[ [re, im], ... n ], ... m ], ... n],   // [i][j][k]
//     "unchecked": false,       // optional
//     "metadata": { ... }       // optional, not interpreted
//   }
// Complex numbers are always [re, im] pairs of JSON numbers.

MeasurementDevice parse_device(const std::string& text);
MeasurementDevice load_device(const std::string& path);
std::string serialize_device(const MeasurementDevice& dev);
void save_device(const MeasurementDevice& dev, const std::string& path);

struct Scenario {
  MeasurementDevice device;
  std::optional<std::vector<Complex>> state;  // default: equiprobable
  std::uint64_t shots = 100000;
  std::optional<std::uint64_t> seed;  // absent: resolved by the caller
  double epsilon = kDefaultEpsilon;
  double delta = kDefaultDelta;
  double epsilon_bits = kDefaultEpsilonBits;

  /// The scenario's input state; the equiprobable standard state when no
  /// explicit amplitudes were given.
  PureState resolved_state() const;
};

// Scenario files reference a device by path (resolved against `base_dir`)
// or carry it inline:
//   {
//     "device": "devices/bsc.json" | { ...device object... },
//     "state": [[re, im], ...],    // optional
//     "shots": 100000,             // optional
//     "seed": 42,                  // optional
//     "epsilon": 0.05, "delta": 0.1, "epsilon_bits": 1e-9   // optional
//   }
Scenario parse_scenario(const std::string& text, const std::string& base_dir = ".");
Scenario load_scenario(const std::string& path);

/// Comma-separated complex literals for the command line:
/// "0.6,0.8i,-1+2e-3i". Only this flag syntax uses "a+bi" notation; files
/// always use [re, im] pairs.
std::vector<Complex> parse_complex_list(const std::string& text);

}  // namespace qmeter
