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

/**
 * @file circuit.hpp
 * @brief Gate-level synthesis of Ising graph states.
 *
 * Each edge term exp(-i (phi/2) X_i X_j) is emitted as the five-gate block
 *
 *     CX(r -> p)  H(r)  P(r, phi)  H(r)  CX(r -> p)
 *
 * where r is the "rotation" endpoint and p its partner. The block equals the
 * edge term up to a global phase, whichever endpoint carries the rotation, so
 * r is picked to put the single-qubit gates on the lower-error qubit.
 */

#pragma once

#include <charconv>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "graphent/calibration.hpp"
#include "graphent/error.hpp"
#include "graphent/graph.hpp"
#include "graphent/state_vector.hpp"

namespace graphent {

class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits) : n_(n_qubits) {
    if (n_ == 0) throw ValidationError("circuit needs at least one qubit");
  }

  std::size_t n_qubits() const noexcept { return n_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  Circuit& add(const Gate& g) {
    check(g.target);
    if (g.kind == GateKind::CX) {
      check(g.control);
      if (g.control == g.target) throw ValidationError("CX control and target must differ");
    }
    gates_.push_back(g);
    return *this;
  }

  Circuit& append(const Circuit& other) {
    for (const auto& g : other.gates()) add(g);
    return *this;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check(std::size_t q) const {
    if (q >= n_) {
      throw ValidationError("gate qubit " + std::to_string(q) + " outside a " +
                            std::to_string(n_) + "-qubit circuit");
    }
  }

  std::size_t n_;
  std::vector<Gate> gates_;
};

inline void run_circuit(StateVector& s, const Circuit& c) {
  if (s.n_qubits() < c.n_qubits()) {
    throw ValidationError("circuit acts on more qubits than the state holds");
  }
  for (const auto& g : c.gates()) s.apply(g);
  s.check_normalized();
}

inline StateVector run_circuit(const Circuit& c, StateVector s) {
  run_circuit(s, c);
  return s;
}

struct EdgeOrientation {
  Edge edge;
  std::size_t rotation_qubit = 0;
  std::size_t partner_qubit = 0;

  static EdgeOrientation make(Edge e, std::size_t rotation) {
    if (e.first == e.second) throw ValidationError("edge endpoints must differ");
    if (rotation != e.first && rotation != e.second) {
      throw ValidationError("rotation qubit is not an endpoint of the edge");
    }
    return {e, rotation, rotation == e.first ? e.second : e.first};
  }

  friend bool operator==(const EdgeOrientation&, const EdgeOrientation&) = default;
};

/// Rotation goes on the endpoint with the smaller single-qubit gate error;
/// ties and missing calibration fall back to the smaller index.
inline EdgeOrientation choose_orientation(Edge e, const CalibrationData* cal = nullptr) {
  const std::size_t lo = std::min(e.first, e.second);
  const std::size_t hi = std::max(e.first, e.second);
  if (cal == nullptr) return EdgeOrientation::make(e, lo);
  if (!cal->covers(lo) || !cal->covers(hi)) {
    throw ValidationError("calibration has no gate error for edge (" +
                          std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  return EdgeOrientation::make(e, cal->gate_error[hi] < cal->gate_error[lo] ? hi : lo);
}

inline EdgeOrientation choose_orientation(Edge e, const std::optional<CalibrationData>& cal) {
  return choose_orientation(e, cal ? &*cal : nullptr);
}

inline void append_edge_block(Circuit& c, const EdgeOrientation& o, double phi) {
  const auto r = o.rotation_qubit;
  const auto p = o.partner_qubit;
  c.add(Gate::cx(r, p)).add(Gate::h(r)).add(Gate::p(r, phi)).add(Gate::h(r)).add(Gate::cx(r, p));
}

/// Five-gate fragment on a circuit wide enough for both endpoints.
inline Circuit synthesize_edge(const EdgeOrientation& o, double phi) {
  Circuit c(std::max(o.rotation_qubit, o.partner_qubit) + 1);
  append_edge_block(c, o, phi);
  return c;
}

/// One edge block per edge, in sorted edge order.
inline Circuit synthesize_graph_circuit(const Graph& g, double phi,
                                        const CalibrationData* cal = nullptr) {
  Circuit c(g.n_vertices());
  for (const auto& e : g.edges()) append_edge_block(c, choose_orientation(e, cal), phi);
  return c;
}

inline Circuit synthesize_graph_circuit(const Graph& g, double phi,
                                        const std::optional<CalibrationData>& cal) {
  return synthesize_graph_circuit(g, phi, cal ? &*cal : nullptr);
}

/// Basis change so that a z measurement of qubit l reads out <sigma_axis>:
/// y uses RX(+pi/2), x uses RY(-pi/2). Note the sign on RY: with
/// RY(t) = exp(-i t Y / 2), RY(+pi/2) would map Z to -X.
inline Circuit measurement_prelude(Axis axis, std::size_t l, std::size_t n_qubits) {
  Circuit c(n_qubits);
  switch (axis) {
    case Axis::Z:
      break;
    case Axis::Y:
      c.add(Gate::rx(l, std::numbers::pi / 2.0));
      break;
    case Axis::X:
      c.add(Gate::ry(l, -std::numbers::pi / 2.0));
      break;
  }
  return c;
}

// Text listing --------------------------------------------------------------

/// Shortest decimal that round-trips to the same double.
inline std::string format_real(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw ConsistencyError("failed to format real number");
  return std::string(buf, end);
}

inline std::string gate_to_text(const Gate& g) {
  auto q = [](std::size_t i) { return "q[" + std::to_string(i) + "]"; };
  switch (g.kind) {
    case GateKind::H: return "h " + q(g.target);
    case GateKind::P: return "p(" + format_real(g.angle) + ") " + q(g.target);
    case GateKind::RX: return "rx(" + format_real(g.angle) + ") " + q(g.target);
    case GateKind::RY: return "ry(" + format_real(g.angle) + ") " + q(g.target);
    case GateKind::CX: return "cx " + q(g.control) + ", " + q(g.target);
  }
  return {};
}

/// One gate per line, each line newline-terminated. Empty circuit -> "".
inline std::string to_text(const Circuit& c) {
  std::string out;
  for (const auto& g : c.gates()) {
    out += gate_to_text(g);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::size_t parse_qubit_ref(std::string_view s) {
  s = trim(s);
  if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']') {
    throw ValidationError("expected q[i], got '" + std::string(s) + "'");
  }
  return parse_index(std::string(s.substr(2, s.size() - 3)), "qubit index");
}

inline double parse_real(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("expected a real number, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

/// Inverse of to_text(). Blank lines and '#' comments are skipped.
inline Circuit parse_circuit_text(std::string_view text, std::size_t n_qubits) {
  Circuit c(n_qubits);
  for (const auto& line : detail::data_lines(text)) {
    std::string_view sv = line;
    auto sp = sv.find(' ');
    if (sp == std::string_view::npos) throw ValidationError("malformed gate line '" + line + "'");
    auto head = sv.substr(0, sp);
    auto rest = sv.substr(sp + 1);
    if (head == "h") {
      c.add(Gate::h(detail::parse_qubit_ref(rest)));
    } else if (head == "cx") {
      auto comma = rest.find(',');
      if (comma == std::string_view::npos) throw ValidationError("cx needs two qubits: '" + line + "'");
      c.add(Gate::cx(detail::parse_qubit_ref(rest.substr(0, comma)),
                     detail::parse_qubit_ref(rest.substr(comma + 1))));
    } else {
      auto open = head.find('(');
      if (open == std::string_view::npos || head.back() != ')') {
        throw ValidationError("unknown gate in line '" + line + "'");
      }
      auto name = head.substr(0, open);
      double angle = detail::parse_real(head.substr(open + 1, head.size() - open - 2));
      auto q = detail::parse_qubit_ref(rest);
      if (name == "p") c.add(Gate::p(q, angle));
      else if (name == "rx") c.add(Gate::rx(q, angle));
      else if (name == "ry") c.add(Gate::ry(q, angle));
      else throw ValidationError("unknown gate '" + std::string(name) + "'");
    }
  }
  return c;
}

}  // namespace graphent
