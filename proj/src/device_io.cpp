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

#include "qmeter/device_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qmeter/errors.hpp"

namespace qmeter {

namespace {

using json = nlohmann::ordered_json;

/// Translate a byte offset from nlohmann's parse_error into line/column.
ParseError to_parse_error(const std::string& text,
                          const nlohmann::json::parse_error& err) {
  std::size_t byte = err.byte > 0 ? err.byte - 1 : 0;
  byte = std::min(byte, text.size());
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return ParseError(err.what(), line, column);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw to_parse_error(text, err);
  }
}

Complex complex_from_json(const json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
      !pair[1].is_number()) {
    throw ParseError("expected a [re, im] number pair, got " + pair.dump());
  }
  return Complex(pair[0].get<double>(), pair[1].get<double>());
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MeasurementDevice device_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw ParseError("device: expected a JSON object");
  }
  for (const char* key : {"n", "m", "gamma"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("device: missing required field '") + key + "'");
    }
  }
  const auto n = doc["n"].get<Eigen::Index>();
  const auto m = doc["m"].get<Eigen::Index>();
  if (n < 1 || m < 1) {
    throw ParseError("device: n and m must be positive");
  }
  const std::string name = doc.value("name", std::string("device"));
  const DeviceKind kind =
      device_kind_from_string(doc.value("kind", std::string("generic")));
  const bool unchecked = doc.value("unchecked", false);
  if (doc.contains("metadata") && !doc["metadata"].is_object()) {
    throw ParseError("device: metadata must be an object");
  }

  const json& gamma = doc["gamma"];
  if (!gamma.is_array() || static_cast<Eigen::Index>(gamma.size()) != n) {
    throw ParseError("device: gamma must be an array of n system slices");
  }
  std::vector<Matrix> responses(static_cast<std::size_t>(n),
                                Matrix::Zero(n, m));
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = gamma[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m) {
      throw ParseError("device: gamma[" + std::to_string(i) +
                       "] must have m pointer entries");
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      const json& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_array() || static_cast<Eigen::Index>(cell.size()) != n) {
        throw ParseError("device: gamma[" + std::to_string(i) + "][" +
                         std::to_string(j) + "] must have n input entries");
      }
      for (Eigen::Index k = 0; k < n; ++k) {
        responses[static_cast<std::size_t>(k)](i, j) =
            complex_from_json(cell[static_cast<std::size_t>(k)]);
      }
    }
  }
  return MeasurementDevice(name, kind, std::move(responses), unchecked);
}

}  // namespace

MeasurementDevice parse_device(const std::string& text) {
  const json doc = parse_json(text);
  try {
    return device_from_json(doc);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("device: ") + err.what());
  }
}

MeasurementDevice load_device(const std::string& path) {
  return parse_device(read_file(path));
}

std::string serialize_device(const MeasurementDevice& dev) {
  json doc;
  doc["name"] = dev.name();
  doc["kind"] = to_string(dev.kind());
  doc["n"] = dev.n();
  doc["m"] = dev.m();
  json gamma = json::array();
  for (Eigen::Index i = 0; i < dev.n(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < dev.m(); ++j) {
      json cell = json::array();
      for (Eigen::Index k = 0; k < dev.n(); ++k) {
        cell.push_back(complex_to_json(dev.gamma(i, j, k)));
      }
      row.push_back(std::move(cell));
    }
    gamma.push_back(std::move(row));
  }
  doc["gamma"] = std::move(gamma);
  if (dev.unchecked()) doc["unchecked"] = true;
  return doc.dump(2) + "\n";
}

void save_device(const MeasurementDevice& dev, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write file: " + path);
  }
  out << serialize_device(dev);
}

PureState Scenario::resolved_state() const {
  if (!state.has_value()) {
    return PureState::uniform(device.n());
  }
  Vector amps(static_cast<Eigen::Index>(state->size()));
  for (std::size_t i = 0; i < state->size(); ++i) {
    amps(static_cast<Eigen::Index>(i)) = (*state)[i];
  }
  return PureState(std::move(amps));
}

namespace {

Scenario scenario_from_json(const json& doc, const std::string& base_dir) {
  if (!doc.is_object()) {
    throw ParseError("scenario: expected a JSON object");
  }
  if (!doc.contains("device")) {
    throw ParseError("scenario: missing required field 'device'");
  }

  const json& device_field = doc["device"];
  MeasurementDevice device = [&] {
    if (device_field.is_string()) {
      std::filesystem::path p(device_field.get<std::string>());
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      return load_device(p.string());
    }
    return device_from_json(device_field);
  }();

  Scenario scenario{std::move(device)};
  if (doc.contains("state")) {
    const json& state = doc["state"];
    if (!state.is_array() || state.empty()) {
      throw ParseError("scenario: state must be a non-empty array of [re, im]");
    }
    std::vector<Complex> amplitudes;
    amplitudes.reserve(state.size());
    for (const json& pair : state) {
      amplitudes.push_back(complex_from_json(pair));
    }
    scenario.state = std::move(amplitudes);
  }
  scenario.shots = doc.value("shots", scenario.shots);
  if (scenario.shots < 1) {
    throw ParseError("scenario: shots must be >= 1");
  }
  if (doc.contains("seed")) {
    scenario.seed = doc["seed"].get<std::uint64_t>();
  }
  scenario.epsilon = doc.value("epsilon", scenario.epsilon);
  scenario.delta = doc.value("delta", scenario.delta);
  scenario.epsilon_bits = doc.value("epsilon_bits", scenario.epsilon_bits);

  // Reject unnormalized states up front so the error names the scenario.
  try {
    scenario.resolved_state();
  } catch (const Error& err) {
    throw ParseError(std::string("scenario: invalid state: ") + err.what());
  }
  return scenario;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& base_dir) {
  const json doc = parse_json(text);
  try {
    return scenario_from_json(doc, base_dir);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("scenario: ") + err.what());
  }
}

Scenario load_scenario(const std::string& path) {
  const std::string base_dir =
      std::filesystem::path(path).parent_path().string();
  return parse_scenario(read_file(path), base_dir.empty() ? "." : base_dir);
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(start, end - start);
    // Trim whitespace.
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw ParseError("empty entry in complex list: '" + text + "'");
    }
    token = token.substr(first, last - first + 1);

    const char* cursor = token.c_str();
    char* next = nullptr;
    double a = std::strtod(cursor, &next);
    bool have_real = next != cursor;
    if (!have_real) {
      // Bare "i", "+i", "-i".
      double sign = 1.0;
      if (*cursor == '+' || *cursor == '-') {
        if (*cursor == '-') sign = -1.0;
        ++cursor;
      }
      if (*cursor == 'i' && *(cursor + 1) == '\0') {
        values.push_back(Complex(0.0, sign));
        start = end + 1;
        if (end == text.size()) break;
        continue;
      }
      throw ParseError("cannot parse complex literal: '" + token + "'");
    }
    cursor = next;
    if (*cursor == '\0') {
      values.push_back(Complex(a, 0.0));
    } else if (*cursor == 'i' && *(cursor + 1) == '\0') {
      values.push_back(Complex(0.0, a));
    } else if (*cursor == '+' || *cursor == '-') {
      const double sign = (*cursor == '-') ? -1.0 : 1.0;
      ++cursor;
      double b = 1.0;
      if (*cursor != 'i') {
        b = std::strtod(cursor, &next);
        if (next == cursor) {
          throw ParseError("cannot parse complex literal: '" + token + "'");
        }
        cursor = next;
      }
      if (*cursor != 'i' || *(cursor + 1) != '\0') {
        throw ParseError("cannot parse complex literal: '" + token + "'");
      }
      values.push_back(Complex(a, sign * b));
    } else {
      throw ParseError("cannot parse complex literal: '" + token + "'");
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (values.empty()) {
    throw ParseError("empty complex list");
  }
  return values;
}

}  // namespace qmeter
