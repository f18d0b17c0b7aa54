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

// Angle expressions ("1.3", "pi", "-pi/2", "2pi/3", "0.5*pi") and sweep grids.

#pragma once

#include <charconv>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "graphent/error.hpp"
#include "graphent/graph.hpp"

namespace graphent {

namespace detail {

inline double parse_decimal(std::string_view s, std::string_view whole) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("cannot parse angle '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace detail

/// [sign] [coef] [*] pi [/ den]  or a plain decimal number of radians.
inline double parse_phi(std::string_view text) {
  const auto whole = detail::trim(text);
  std::string_view s = whole;
  if (s.empty()) throw ValidationError("empty angle expression");

  double sign = 1.0;
  if (s.front() == '+' || s.front() == '-') {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  if (s.empty() || s.front() == '+' || s.front() == '-') {
    throw ValidationError("cannot parse angle '" + std::string(whole) + "'");
  }
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    return sign * detail::parse_decimal(s, whole);
  }

  auto coef_text = s.substr(0, pi_pos);
  if (!coef_text.empty() && coef_text.back() == '*') coef_text.remove_suffix(1);
  const double coef = coef_text.empty() ? 1.0 : detail::parse_decimal(coef_text, whole);

  auto rest = s.substr(pi_pos + 2);
  double den = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw ValidationError("cannot parse angle '" + std::string(whole) + "'");
    den = detail::parse_decimal(rest.substr(1), whole);
    if (den == 0.0) throw ValidationError("division by zero in angle '" + std::string(whole) + "'");
  }
  return sign * coef * std::numbers::pi / den;
}

/// Inclusive uniform grid: `count` points from start to stop.
struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 2;

  SweepSpec(double start_, double stop_, std::size_t count_)
      : start(start_), stop(stop_), count(count_) {
    if (count < 2) throw ValidationError("sweep needs at least 2 points");
    if (!(start < stop)) throw ValidationError("sweep start must be below stop");
  }

  /// "START:STOP:COUNT", endpoints as angle expressions.
  static SweepSpec parse(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw ValidationError("sweep must look like START:STOP:COUNT");
    }
    return SweepSpec(parse_phi(text.substr(0, c1)), parse_phi(text.substr(c1 + 1, c2 - c1 - 1)),
                     detail::parse_index(std::string(detail::trim(text.substr(c2 + 1))),
                                         "sweep count"));
  }

  double at(std::size_t i) const {
    if (i + 1 == count) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }

  std::vector<double> points() const {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = at(i);
    return out;
  }
};

}  // namespace graphent
