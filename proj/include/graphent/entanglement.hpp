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
 * @file entanglement.hpp
 * @brief Geometric measure of entanglement of one spin with the rest.
 *
 * For a pure state the measure of spin l reduces to E = (1 - |<sigma_l>|) / 2,
 * a function of the spin's Bloch vector only. In the Ising graph state
 * exp(-i (phi/2) sum_edges X_i X_j)|0...0> the transverse components vanish
 * and <sigma^z_l> = cos^k(phi) with k the degree of l, giving the closed form
 * E_l = (1 - |cos phi|^k) / 2.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/error.hpp"
#include "graphent/graph.hpp"
#include "graphent/state_vector.hpp"

namespace graphent {

inline constexpr double kBlochTolerance = 1e-9;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }

  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

enum class Method { Analytic, Exact, Shots };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Analytic: return "analytic";
    case Method::Exact: return "exact";
    case Method::Shots: return "shots";
  }
  return "?";
}

inline std::optional<Method> method_from_name(std::string_view s) {
  if (s == "analytic") return Method::Analytic;
  if (s == "exact") return Method::Exact;
  if (s == "shots") return Method::Shots;
  return std::nullopt;
}

struct EntanglementEstimate {
  Vertex spin = 0;
  double value = 0.0;
  BlochVector bloch;
  Method method = Method::Exact;
  std::optional<double> std_error;    // shots only
  std::optional<std::uint64_t> shots;  // shots only
};

/// (1 - |cos phi|^k) / 2. k = 0 gives 0 for every phi.
///
/// |phi| is reduced into [0, pi/2] with fmod before taking the cosine, so
/// E(-phi), E(phi + pi) and E(pi - phi) are bitwise equal whenever the
/// shifted angle is itself exact in double precision.
inline double analytic_entanglement(std::size_t k, double phi) {
  if (k == 0) return 0.0;
  constexpr double pi = std::numbers::pi;
  double r = std::fmod(std::abs(phi), pi);
  r = std::min(r, pi - r);
  return 0.5 * (1.0 - std::pow(std::cos(r), static_cast<double>(k)));
}

inline double entanglement_from_bloch(const BlochVector& b) {
  const double n = b.norm();
  if (!(n <= 1.0 + kBlochTolerance)) {
    throw ValidationError("Bloch vector norm " + std::to_string(n) + " exceeds 1");
  }
  return 0.5 * (1.0 - std::min(1.0, n));
}

inline BlochVector bloch_vector(const StateVector& s, std::size_t l) {
  return {expectation_pauli(s, Axis::X, l), expectation_pauli(s, Axis::Y, l),
          expectation_pauli(s, Axis::Z, l)};
}

inline EntanglementEstimate analytic_estimate(const Graph& g, double phi, Vertex l) {
  const auto k = g.degree(l);
  EntanglementEstimate est;
  est.spin = l;
  est.method = Method::Analytic;
  est.value = analytic_entanglement(k, phi);
  est.bloch = {0.0, 0.0, std::pow(std::cos(phi), static_cast<double>(k))};
  return est;
}

/// Builds the graph state exactly and evaluates all three Pauli means of l.
inline EntanglementEstimate exact_entanglement(const Graph& g, double phi, Vertex l,
                                               std::size_t max_qubits = kDefaultMaxQubits) {
  g.check_vertex(l);
  auto s = evolve_graph_exact(StateVector::zero(g.n_vertices(), max_qubits), g, phi);
  EntanglementEstimate est;
  est.spin = l;
  est.method = Method::Exact;
  est.bloch = bloch_vector(s, l);
  est.value = entanglement_from_bloch(est.bloch);
  return est;
}

/// Every spin's exact estimate from a single state preparation.
inline std::vector<EntanglementEstimate> exact_entanglement_all(
    const Graph& g, double phi, std::size_t max_qubits = kDefaultMaxQubits) {
  auto s = evolve_graph_exact(StateVector::zero(g.n_vertices(), max_qubits), g, phi);
  std::vector<EntanglementEstimate> out;
  out.reserve(g.n_vertices());
  for (Vertex l = 0; l < g.n_vertices(); ++l) {
    EntanglementEstimate est;
    est.spin = l;
    est.method = Method::Exact;
    est.bloch = bloch_vector(s, l);
    est.value = entanglement_from_bloch(est.bloch);
    out.push_back(est);
  }
  return out;
}

}  // namespace graphent
