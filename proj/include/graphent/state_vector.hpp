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
 * @file state_vector.hpp
 * @brief Dense pure-state simulator.
 *
 * Basis convention: basis index b holds qubit l in bit (b >> l) & 1, so
 * qubit 0 is the least-significant bit. Bit value 0 is |0> = spin up.
 *
 * Gate kernels walk amplitude pairs by stride and never build a matrix.
 * The dense 4x4 path in evolve_edge_exact() is kept separate on purpose:
 * it is the reference the synthesized circuits are checked against.
 */

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphent/error.hpp"
#include "graphent/graph.hpp"

namespace graphent {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 24;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr const char* kMaxQubitsEnv = "GRAPHENT_MAX_QUBITS";

/// Qubit cap from GRAPHENT_MAX_QUBITS, falling back to kDefaultMaxQubits.
inline std::size_t max_qubits_from_env() {
  const char* v = std::getenv(kMaxQubitsEnv);
  if (v == nullptr || *v == '\0') return kDefaultMaxQubits;
  char* end = nullptr;
  auto parsed = std::strtoull(v, &end, 10);
  if (*end != '\0' || parsed == 0 || parsed > 62) {
    throw ValidationError(std::string(kMaxQubitsEnv) + "='" + v +
                          "' is not a qubit count in [1, 62]");
  }
  return static_cast<std::size_t>(parsed);
}

enum class Axis { X, Y, Z };

inline const char* axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

enum class GateKind { H, P, RX, RY, CX };

struct Gate {
  GateKind kind = GateKind::H;
  std::size_t target = 0;
  std::size_t control = 0;  // CX only
  double angle = 0.0;       // P, RX, RY only

  static Gate h(std::size_t q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate p(std::size_t q, double phi) { return {GateKind::P, q, 0, phi}; }
  static Gate rx(std::size_t q, double theta) { return {GateKind::RX, q, 0, theta}; }
  static Gate ry(std::size_t q, double theta) { return {GateKind::RY, q, 0, theta}; }
  static Gate cx(std::size_t control, std::size_t target) {
    if (control == target) {
      throw ValidationError("CX control and target must differ (qubit " +
                            std::to_string(control) + ")");
    }
    return {GateKind::CX, target, control, 0.0};
  }

  bool is_two_qubit() const noexcept { return kind == GateKind::CX; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class StateVector {
 public:
  /// |0...0> on n qubits. Throws ResourceError above `max_qubits`.
  static StateVector zero(std::size_t n, std::size_t max_qubits = kDefaultMaxQubits) {
    if (n == 0) throw ValidationError("state needs at least one qubit");
    if (n > max_qubits) {
      throw ResourceError(std::to_string(n) + " qubits exceeds the cap of " +
                          std::to_string(max_qubits));
    }
    StateVector s;
    s.n_ = n;
    s.amps_.assign(std::size_t{1} << n, Complex{0.0, 0.0});
    s.amps_[0] = 1.0;
    return s;
  }

  /// Wraps explicit amplitudes; size must be a power of two and the vector
  /// normalized to within kNormTolerance.
  static StateVector from_amplitudes(std::vector<Complex> amps) {
    if (amps.size() < 2 || (amps.size() & (amps.size() - 1)) != 0) {
      throw ValidationError("amplitude count must be a power of two >= 2");
    }
    StateVector s;
    s.n_ = static_cast<std::size_t>(std::countr_zero(amps.size()));
    s.amps_ = std::move(amps);
    if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
      throw ValidationError("amplitudes are not normalized");
    }
    return s;
  }

  std::size_t n_qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t b) const { return amps_[b]; }

  double norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
  }

  /// Throws ConsistencyError when the norm has drifted beyond kNormTolerance.
  void check_normalized() const {
    double drift = std::abs(norm_squared() - 1.0);
    if (drift > kNormTolerance) {
      throw ConsistencyError("state norm drifted by " + std::to_string(drift));
    }
  }

  void check_qubit(std::size_t q) const {
    if (q >= n_) {
      throw ValidationError("qubit " + std::to_string(q) +
                            " out of range for " + std::to_string(n_) +
                            "-qubit state");
    }
  }

  void apply(const Gate& g) {
    check_qubit(g.target);
    switch (g.kind) {
      case GateKind::H: {
        const double r = std::numbers::sqrt2 / 2.0;
        apply_pairs(g.target, [r](Complex& a0, Complex& a1) {
          Complex s = a0 + a1;
          Complex d = a0 - a1;
          a0 = r * s;
          a1 = r * d;
        });
        break;
      }
      case GateKind::P: {
        const Complex phase = std::polar(1.0, g.angle);
        apply_pairs(g.target, [phase](Complex&, Complex& a1) { a1 *= phase; });
        break;
      }
      case GateKind::RX: {
        const double c = std::cos(g.angle / 2.0);
        const Complex mis{0.0, -std::sin(g.angle / 2.0)};
        apply_pairs(g.target, [c, mis](Complex& a0, Complex& a1) {
          Complex n0 = c * a0 + mis * a1;
          Complex n1 = mis * a0 + c * a1;
          a0 = n0;
          a1 = n1;
        });
        break;
      }
      case GateKind::RY: {
        const double c = std::cos(g.angle / 2.0);
        const double s = std::sin(g.angle / 2.0);
        apply_pairs(g.target, [c, s](Complex& a0, Complex& a1) {
          Complex n0 = c * a0 - s * a1;
          Complex n1 = s * a0 + c * a1;
          a0 = n0;
          a1 = n1;
        });
        break;
      }
      case GateKind::CX: {
        check_qubit(g.control);
        if (g.control == g.target) {
          throw ValidationError("CX control and target must differ");
        }
        const std::size_t cbit = std::size_t{1} << g.control;
        const std::size_t tbit = std::size_t{1} << g.target;
        for (std::size_t b = 0; b < amps_.size(); ++b) {
          if ((b & cbit) && !(b & tbit)) std::swap(amps_[b], amps_[b | tbit]);
        }
        break;
      }
    }
  }

  /// Applies a dense 4x4 unitary to qubits (i, j). Matrix rows/columns are
  /// indexed by 2*bit_i + bit_j.
  void apply_two_qubit(std::size_t i, std::size_t j,
                       const std::array<std::array<Complex, 4>, 4>& u) {
    check_qubit(i);
    check_qubit(j);
    if (i == j) throw ValidationError("two-qubit operation needs distinct qubits");
    const std::size_t bi = std::size_t{1} << i;
    const std::size_t bj = std::size_t{1} << j;
    for (std::size_t b = 0; b < amps_.size(); ++b) {
      if (b & (bi | bj)) continue;
      const std::array<std::size_t, 4> idx{b, b | bj, b | bi, b | bi | bj};
      std::array<Complex, 4> in{amps_[idx[0]], amps_[idx[1]], amps_[idx[2]],
                                amps_[idx[3]]};
      for (std::size_t r = 0; r < 4; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < 4; ++c) acc += u[r][c] * in[c];
        amps_[idx[r]] = acc;
      }
    }
  }

  /// Multiplies every amplitude by e^{i theta}. Test helper for phase checks.
  void apply_global_phase(double theta) {
    const Complex ph = std::polar(1.0, theta);
    for (auto& a : amps_) a *= ph;
  }

 private:
  StateVector() = default;

  template <typename Kernel>
  void apply_pairs(std::size_t q, Kernel&& kernel) {
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t dim = amps_.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
      for (std::size_t k = block; k < block + stride; ++k) {
        kernel(amps_[k], amps_[k + stride]);
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<Complex> amps_;
};

inline StateVector init_zero(std::size_t n, std::size_t max_qubits = kDefaultMaxQubits) {
  return StateVector::zero(n, max_qubits);
}

inline StateVector apply_gate(StateVector s, const Gate& g) {
  s.apply(g);
  return s;
}

/// cos(phi/2) I - i sin(phi/2) X(x)X, i.e. exp(-i (phi/2) X_i X_j).
inline std::array<std::array<Complex, 4>, 4> xx_evolution_matrix(double phi) {
  const Complex c{std::cos(phi / 2.0), 0.0};
  const Complex mis{0.0, -std::sin(phi / 2.0)};
  const Complex z{0.0, 0.0};
  // X(x)X maps |ab> to |(1-a)(1-b)>: anti-diagonal.
  return {{{c, z, z, mis}, {z, c, mis, z}, {z, mis, c, z}, {mis, z, z, c}}};
}

inline void evolve_edge_exact_inplace(StateVector& s, std::size_t i, std::size_t j,
                                      double phi) {
  if (i == j) throw ValidationError("edge endpoints must differ");
  s.apply_two_qubit(i, j, xx_evolution_matrix(phi));
}

inline StateVector evolve_edge_exact(StateVector s, std::size_t i, std::size_t j,
                                     double phi) {
  evolve_edge_exact_inplace(s, i, j, phi);
  return s;
}

/// Applies exp(-i (phi/2) X_i X_j) once per edge of `g`.
inline StateVector evolve_graph_exact(StateVector s, const Graph& g, double phi) {
  if (s.n_qubits() < g.n_vertices()) {
    throw ValidationError("state has " + std::to_string(s.n_qubits()) +
                          " qubits but graph has " +
                          std::to_string(g.n_vertices()) + " vertices");
  }
  for (const auto& e : g.edges()) evolve_edge_exact_inplace(s, e.first, e.second, phi);
  s.check_normalized();
  return s;
}

/// <sigma_axis> on qubit l, from amplitude products.
inline double expectation_pauli(const StateVector& s, Axis axis, std::size_t l) {
  s.check_qubit(l);
  const std::size_t bit = std::size_t{1} << l;
  const auto amps = s.amplitudes();
  if (axis == Axis::Z) {
    double acc = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
      acc += (b & bit) ? -std::norm(amps[b]) : std::norm(amps[b]);
    }
    return acc;
  }
  // <X> = 2 Re sum conj(a0) a1, <Y> = 2 Im sum conj(a0) a1
  Complex acc{0.0, 0.0};
  for (std::size_t b = 0; b < amps.size(); ++b) {
    if (!(b & bit)) acc += std::conj(amps[b]) * amps[b | bit];
  }
  return axis == Axis::X ? 2.0 * acc.real() : 2.0 * acc.imag();
}

struct ZMarginal {
  double p0 = 0.0;
  double p1 = 0.0;
};

inline ZMarginal marginal_z_probs(const StateVector& s, std::size_t l) {
  s.check_qubit(l);
  const std::size_t bit = std::size_t{1} << l;
  ZMarginal m;
  const auto amps = s.amplitudes();
  for (std::size_t b = 0; b < amps.size(); ++b) {
    (b & bit ? m.p1 : m.p0) += std::norm(amps[b]);
  }
  return m;
}

/// |<a|b>|; equals 1 exactly when the states agree up to a global phase.
inline double overlap_magnitude(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ValidationError("overlap of states with different qubit counts");
  }
  Complex acc{0.0, 0.0};
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t k = 0; k < x.size(); ++k) acc += std::conj(x[k]) * y[k];
  return std::min(1.0, std::abs(acc));
}

}  // namespace graphent
