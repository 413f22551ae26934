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

#include "qmeter/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "qmeter/errors.hpp"

namespace qmeter {

namespace {

using json = nlohmann::ordered_json;

json real_matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd real_matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
    throw ParseError("report: expected a matrix of numbers");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != m.cols()) {
      throw ParseError("report: ragged matrix");
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
    }
  }
  return m;
}

json count_matrix_to_json(const CountMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

CountMatrix count_matrix_from_json(const json& rows) {
  CountMatrix m(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(rows[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                    .get<std::uint64_t>();
    }
  }
  return m;
}

json ratio_to_json(double r) {
  if (std::isinf(r)) return nullptr;  // JSON has no infinity
  return r;
}

double ratio_from_json(const json& v) {
  if (v.is_null()) return std::numeric_limits<double>::infinity();
  return v.get<double>();
}

json info_to_json(const InfoReport& info) {
  json doc;
  doc["source_entropy"] = info.source_entropy;
  doc["destination_entropy"] = info.destination_entropy;
  doc["equivocation"] = info.equivocation;
  doc["noise"] = info.noise;
  doc["mutual_information"] = info.mutual_information;
  doc["joint_entropy"] = info.joint_entropy;
  doc["reliability_index"] = info.reliability_index;
  doc["classification"] = to_string(info.classification);
  doc["channel_reliable"] = info.channel_reliable;
  doc["epsilon"] = info.epsilon;
  doc["epsilon_bits"] = info.epsilon_bits;
  return doc;
}

InfoReport info_from_json(const json& doc) {
  InfoReport info;
  info.source_entropy = doc.at("source_entropy").get<double>();
  info.destination_entropy = doc.at("destination_entropy").get<double>();
  info.equivocation = doc.at("equivocation").get<double>();
  info.noise = doc.at("noise").get<double>();
  info.mutual_information = doc.at("mutual_information").get<double>();
  info.joint_entropy = doc.at("joint_entropy").get<double>();
  info.reliability_index = doc.at("reliability_index").get<double>();
  info.classification =
      channel_class_from_string(doc.at("classification").get<std::string>());
  info.channel_reliable = doc.at("channel_reliable").get<bool>();
  info.epsilon = doc.at("epsilon").get<double>();
  info.epsilon_bits = doc.at("epsilon_bits").get<double>();
  return info;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string escaped = "\"";
  for (char c : field) {
    if (c == '"') escaped += '"';
    escaped += c;
  }
  escaped += '"';
  return escaped;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

ScenarioReport run_scenario(const Scenario& scenario) {
  const MeasurementDevice& dev = scenario.device;
  const PureState state = scenario.resolved_state();
  const std::uint64_t seed = scenario.seed.value_or(0);

  CalibrationReport calibration = estimate_channel(dev, scenario.shots, seed);
  InfoReport info = analyze_channel(calibration.exact, scenario.epsilon,
                                    scenario.epsilon_bits);

  const BipartiteState after = apply_device(dev, state);
  std::optional<MhiReliability> mhi;
  if (dev.n() == dev.m()) {
    mhi = mhi_reliability(after, scenario.delta);
  }
  const AscriptionComparison comparison = ascription_comparison(after);

  return ScenarioReport{
      DeviceSummary{dev.name(), dev.kind(), dev.n(), dev.m(), dev.unchecked(),
                    validate_device(dev)},
      std::vector<Complex>(state.amplitudes().data(),
                           state.amplitudes().data() + state.dim()),
      scenario.shots,
      seed,
      scenario.epsilon,
      scenario.delta,
      scenario.epsilon_bits,
      std::move(calibration),
      info,
      std::move(mhi),
      interference_gap(dev, state),
      pointer_distribution(after),
      AscriptionSummary{comparison.kochen_dieks.probabilities,
                        comparison.kochen_dieks.degenerate,
                        comparison.vermaas_dieks.probabilities,
                        comparison.vermaas_dieks.degenerate,
                        comparison.collapse.probabilities,
                        comparison.pointer_basis.probabilities,
                        comparison.misalignment}};
}

std::string csv_header() {
  return "device,n,m,R,E,N,mutual,classification,reliable,max_channel_error,"
         "interference_gap";
}

std::string emit_report(const ScenarioReport& report, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::ostringstream out;
    out << csv_header() << '\n';
    out << csv_escape(report.device.name) << ',' << report.device.n << ','
        << report.device.m << ',' << format_double(report.info.reliability_index)
        << ',' << format_double(report.info.equivocation) << ','
        << format_double(report.info.noise) << ','
        << format_double(report.info.mutual_information) << ','
        << to_string(report.info.classification) << ','
        << (report.info.channel_reliable ? "true" : "false") << ','
        << format_double(report.calibration.max_abs_error) << ','
        << format_double(report.interference_gap) << '\n';
    return out.str();
  }

  json doc;
  {
    json device;
    device["name"] = report.device.name;
    device["kind"] = to_string(report.device.kind);
    device["n"] = report.device.n;
    device["m"] = report.device.m;
    device["unchecked"] = report.device.unchecked;
    device["physical"] = report.device.validation.ok;
    device["max_gram_deviation"] = report.device.validation.max_deviation;
    doc["device"] = std::move(device);
  }
  {
    json state = json::array();
    for (const Complex& z : report.state) {
      state.push_back(json::array({z.real(), z.imag()}));
    }
    doc["state"] = std::move(state);
  }
  doc["shots"] = report.shots;
  doc["seed"] = report.seed;
  doc["epsilon"] = report.epsilon;
  doc["delta"] = report.delta;
  doc["epsilon_bits"] = report.epsilon_bits;
  {
    json calibration;
    calibration["exact"] = real_matrix_to_json(report.calibration.exact.probs());
    calibration["estimated"] =
        real_matrix_to_json(report.calibration.estimated.probs());
    calibration["counts"] = count_matrix_to_json(report.calibration.counts);
    calibration["input_labels"] = report.calibration.exact.input_labels();
    calibration["output_labels"] = report.calibration.exact.output_labels();
    calibration["shots_per_input"] = report.calibration.shots_per_input;
    calibration["seed"] = report.calibration.seed;
    calibration["max_abs_error"] = report.calibration.max_abs_error;
    doc["calibration"] = std::move(calibration);
  }
  doc["info"] = info_to_json(report.info);
  if (report.mhi.has_value()) {
    json mhi;
    mhi["delta"] = report.mhi->delta;
    json ratios = json::array();
    for (double r : report.mhi->ratios) ratios.push_back(ratio_to_json(r));
    mhi["ratios"] = std::move(ratios);
    mhi["reliable"] = report.mhi->reliable;
    doc["mhi"] = std::move(mhi);
  } else {
    doc["mhi"] = nullptr;
  }
  doc["interference_gap"] = report.interference_gap;
  doc["pointer_distribution"] = report.pointer_probs;
  {
    json ascriptions;
    ascriptions["kochen_dieks"] = {
        {"probabilities", report.ascriptions.kochen_dieks_probs},
        {"degenerate", report.ascriptions.kochen_dieks_degenerate}};
    ascriptions["vermaas_dieks"] = {
        {"probabilities", report.ascriptions.vermaas_dieks_probs},
        {"degenerate", report.ascriptions.vermaas_dieks_degenerate}};
    ascriptions["collapse"] = {
        {"probabilities", report.ascriptions.collapse_probs}};
    ascriptions["pointer_basis"] = {
        {"probabilities", report.ascriptions.pointer_basis_probs}};
    ascriptions["pointer_misalignment"] = {
        {"value", report.ascriptions.misalignment.value},
        {"degenerate", report.ascriptions.misalignment.degenerate}};
    doc["ascriptions"] = std::move(ascriptions);
  }
  return doc.dump(2) + "\n";
}

ScenarioReport parse_report(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(err.what());
  }
  try {
    const json& device = doc.at("device");
    DeviceSummary summary;
    summary.name = device.at("name").get<std::string>();
    summary.kind = device_kind_from_string(device.at("kind").get<std::string>());
    summary.n = device.at("n").get<Eigen::Index>();
    summary.m = device.at("m").get<Eigen::Index>();
    summary.unchecked = device.at("unchecked").get<bool>();
    summary.validation.ok = device.at("physical").get<bool>();
    summary.validation.max_deviation =
        device.at("max_gram_deviation").get<double>();

    std::vector<Complex> state;
    for (const json& pair : doc.at("state")) {
      state.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }

    const json& calibration = doc.at("calibration");
    const std::vector<std::string> input_labels =
        calibration.at("input_labels").get<std::vector<std::string>>();
    const std::vector<std::string> output_labels =
        calibration.at("output_labels").get<std::vector<std::string>>();
    CalibrationReport cal{
        ChannelMatrix(real_matrix_from_json(calibration.at("exact")),
                      input_labels, output_labels),
        ChannelMatrix(real_matrix_from_json(calibration.at("estimated")),
                      input_labels, output_labels),
        count_matrix_from_json(calibration.at("counts")),
        calibration.at("shots_per_input").get<std::uint64_t>(),
        calibration.at("seed").get<std::uint64_t>(),
        calibration.at("max_abs_error").get<double>()};

    ScenarioReport report{std::move(summary),
                          std::move(state),
                          doc.at("shots").get<std::uint64_t>(),
                          doc.at("seed").get<std::uint64_t>(),
                          doc.at("epsilon").get<double>(),
                          doc.at("delta").get<double>(),
                          doc.at("epsilon_bits").get<double>(),
                          std::move(cal),
                          info_from_json(doc.at("info")),
                          std::nullopt,
                          doc.at("interference_gap").get<double>(),
                          doc.at("pointer_distribution").get<std::vector<double>>(),
                          AscriptionSummary{}};
    if (!doc.at("mhi").is_null()) {
      MhiReliability mhi;
      mhi.delta = doc["mhi"].at("delta").get<double>();
      for (const json& r : doc["mhi"].at("ratios")) {
        mhi.ratios.push_back(ratio_from_json(r));
      }
      mhi.reliable = doc["mhi"].at("reliable").get<bool>();
      report.mhi = std::move(mhi);
    }
    const json& ascriptions = doc.at("ascriptions");
    report.ascriptions.kochen_dieks_probs =
        ascriptions.at("kochen_dieks").at("probabilities").get<std::vector<double>>();
    report.ascriptions.kochen_dieks_degenerate =
        ascriptions.at("kochen_dieks").at("degenerate").get<bool>();
    report.ascriptions.vermaas_dieks_probs =
        ascriptions.at("vermaas_dieks").at("probabilities").get<std::vector<double>>();
    report.ascriptions.vermaas_dieks_degenerate =
        ascriptions.at("vermaas_dieks").at("degenerate").get<bool>();
    report.ascriptions.collapse_probs =
        ascriptions.at("collapse").at("probabilities").get<std::vector<double>>();
    report.ascriptions.pointer_basis_probs =
        ascriptions.at("pointer_basis").at("probabilities").get<std::vector<double>>();
    report.ascriptions.misalignment.value =
        ascriptions.at("pointer_misalignment").at("value").get<double>();
    report.ascriptions.misalignment.degenerate =
        ascriptions.at("pointer_misalignment").at("degenerate").get<bool>();
    return report;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("report: ") + err.what());
  }
}

}  // namespace qmeter
