// Copyright 2026 The graphent Authors
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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphent/error.hpp"
#include "json.hpp"

namespace graphent {

/// Per-qubit readout and single-qubit gate error rates plus per directed
/// (control, target) CX error rates. All values are probabilities.
///
/// JSON form:
///   {"readout_error": [..], "gate_error": [..], "cx_error": {"1-0": 7.7e-3, ..}}
struct CalibrationData {
  std::vector<double> readout_error;
  std::vector<double> gate_error;
  std::map<std::pair<std::size_t, std::size_t>, double> cx_error;

  std::size_t n_qubits() const noexcept { return readout_error.size(); }

  bool covers(std::size_t q) const noexcept {
    return q < readout_error.size() && q < gate_error.size();
  }

  std::optional<double> cx(std::size_t control, std::size_t target) const {
    auto it = cx_error.find({control, target});
    if (it == cx_error.end()) return std::nullopt;
    return it->second;
  }

  void validate() const {
    auto check = [](double p, const std::string& where) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(where + " = " + std::to_string(p) +
                              " is not a probability in [0, 1]");
      }
    };
    if (readout_error.size() != gate_error.size()) {
      throw ValidationError("readout_error and gate_error list different qubit counts");
    }
    for (std::size_t q = 0; q < readout_error.size(); ++q) {
      check(readout_error[q], "readout_error[" + std::to_string(q) + "]");
      check(gate_error[q], "gate_error[" + std::to_string(q) + "]");
    }
    for (const auto& [pair, p] : cx_error) {
      auto name = "cx_error[" + std::to_string(pair.first) + "-" +
                  std::to_string(pair.second) + "]";
      if (pair.first == pair.second) throw ValidationError(name + " has control == target");
      if (pair.first >= n_qubits() || pair.second >= n_qubits()) {
        throw ValidationError(name + " references a qubit without readout/gate data");
      }
      check(p, name);
    }
  }

  friend bool operator==(const CalibrationData&, const CalibrationData&) = default;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> parse_cx_key(const std::string& key) {
  auto dash = key.find('-');
  auto digits = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  if (dash == std::string::npos || !digits(std::string_view(key).substr(0, dash)) ||
      !digits(std::string_view(key).substr(dash + 1))) {
    throw ValidationError("cx_error key '" + key + "' must look like \"c-t\"");
  }
  return {std::stoul(key.substr(0, dash)), std::stoul(key.substr(dash + 1))};
}

inline std::vector<double> probability_list(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("calibration lacks \"") + key + "\"");
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw ValidationError(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number()) throw ValidationError(std::string("\"") + key + "\" entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace detail

inline CalibrationData parse_calibration(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid calibration JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("calibration JSON must be an object");
  CalibrationData cal;
  cal.readout_error = detail::probability_list(doc, "readout_error");
  cal.gate_error = detail::probability_list(doc, "gate_error");
  if (doc.contains("cx_error")) {
    const auto& cx = doc.at("cx_error");
    if (!cx.is_object()) throw ValidationError("\"cx_error\" must be an object");
    for (const auto& [key, value] : cx.items()) {
      if (!value.is_number()) throw ValidationError("cx_error values must be numbers");
      cal.cx_error[detail::parse_cx_key(key)] = value.get<double>();
    }
  }
  cal.validate();
  return cal;
}

inline nlohmann::json to_json(const CalibrationData& cal) {
  nlohmann::json cx = nlohmann::json::object();
  for (const auto& [pair, p] : cal.cx_error) {
    cx[std::to_string(pair.first) + "-" + std::to_string(pair.second)] = p;
  }
  return {{"readout_error", cal.readout_error},
          {"gate_error", cal.gate_error},
          {"cx_error", std::move(cx)}};
}

/// IBM Q Valencia calibration of 19 January 2021.
inline CalibrationData valencia_calibration() {
  CalibrationData cal;
  cal.readout_error = {4.33e-2, 2.92e-2, 6.50e-2, 2.24e-2, 1.61e-2};
  cal.gate_error = {4.35e-4, 3.14e-4, 10.98e-4, 6.17e-4, 9.90e-4};
  cal.cx_error = {{{0, 1}, 7.70e-3},  {{1, 0}, 7.70e-3},  {{1, 2}, 13.70e-3},
                  {{1, 3}, 12.37e-3}, {{2, 1}, 13.70e-3}, {{3, 1}, 12.37e-3},
                  {{3, 4}, 23.68e-3}, {{4, 3}, 23.68e-3}};
  return cal;
}

/// Same device with gate and CX errors zeroed: only readout noise remains.
inline CalibrationData readout_only(CalibrationData cal) {
  for (auto& g : cal.gate_error) g = 0.0;
  for (auto& [pair, p] : cal.cx_error) p = 0.0;
  return cal;
}

}  // namespace graphent
