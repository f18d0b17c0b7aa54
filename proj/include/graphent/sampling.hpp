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
 * @file sampling.hpp
 * @brief Finite-shot emulation of the measurement pipeline.
 *
 * The spin's three Pauli means are measured in three separate experiments
 * (z, x, y). Each experiment prepares the graph state with the synthesized
 * circuit, applies the axis prelude, and samples z outcomes. Readout error
 * is a symmetric per-qubit bit flip; gate noise, when enabled, is a
 * trajectory-level random Pauli after each gate.
 *
 * Randomness: std::mt19937_64 (its output sequence is fixed by the standard)
 * with 53-bit uniforms built by hand and splitmix64 substream derivation.
 * Identical inputs and seed give bit-identical results.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphent/calibration.hpp"
#include "graphent/circuit.hpp"
#include "graphent/entanglement.hpp"
#include "graphent/error.hpp"
#include "graphent/graph.hpp"
#include "graphent/state_vector.hpp"

namespace graphent {

inline constexpr std::uint64_t kDefaultShots = 8192;
inline constexpr std::uint64_t kDefaultSeed = 1;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic child seed for the substream labelled by `tags`.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = splitmix64(base);
  for (auto t : tags) h = splitmix64(h ^ splitmix64(t + 0x632be59bd9b4e019ULL));
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), n > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = 0;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

/// Outcome histogram keyed by basis index (qubit l is bit l).
struct ShotResult {
  std::size_t n_qubits = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t outcome) const {
    auto it = counts.find(outcome);
    return it == counts.end() ? 0 : it->second;
  }

  friend bool operator==(const ShotResult&, const ShotResult&) = default;
};

/// Binary numeral of the basis index, qubit n-1 first: qubit 0 is the
/// rightmost character.
inline std::string outcome_string(std::uint64_t outcome, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if ((outcome >> q) & 1U) s[n_qubits - 1 - q] = '1';
  }
  return s;
}

inline std::map<std::string, std::uint64_t> counts_by_string(const ShotResult& r) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& [outcome, c] : r.counts) out[outcome_string(outcome, r.n_qubits)] = c;
  return out;
}

namespace detail {

inline std::vector<double> cumulative_probabilities(const StateVector& s) {
  std::vector<double> cdf(s.dimension());
  double acc = 0.0;
  const auto amps = s.amplitudes();
  for (std::size_t b = 0; b < amps.size(); ++b) {
    acc += std::norm(amps[b]);
    cdf[b] = acc;
  }
  return cdf;
}

inline std::uint64_t draw(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform() * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<std::uint64_t>(it - cdf.begin());
}

}  // namespace detail

/// Draws `shots` i.i.d. z-basis outcomes from |amplitude|^2.
inline ShotResult sample_z(const StateVector& s, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ValidationError("shots must be positive");
  auto cdf = detail::cumulative_probabilities(s);
  Rng rng(seed);
  ShotResult r{s.n_qubits(), shots, seed, {}};
  for (std::uint64_t k = 0; k < shots; ++k) ++r.counts[detail::draw(cdf, rng)];
  return r;
}

/// Flips each bit of each shot independently with its qubit's readout error.
inline ShotResult corrupt_readout(const ShotResult& r, const CalibrationData& cal,
                                  std::uint64_t seed) {
  if (cal.readout_error.size() < r.n_qubits) {
    throw ValidationError("calibration covers " + std::to_string(cal.readout_error.size()) +
                          " qubits, outcomes have " + std::to_string(r.n_qubits));
  }
  Rng rng(seed);
  ShotResult out{r.n_qubits, r.shots, r.seed, {}};
  for (const auto& [outcome, c] : r.counts) {
    for (std::uint64_t k = 0; k < c; ++k) {
      std::uint64_t flipped = outcome;
      for (std::size_t q = 0; q < r.n_qubits; ++q) {
        if (rng.uniform() < cal.readout_error[q]) flipped ^= std::uint64_t{1} << q;
      }
      ++out.counts[flipped];
    }
  }
  return out;
}

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// (n0 - n1) / shots on qubit l, with standard error sqrt((1 - mean^2) / shots).
inline MeanEstimate estimate_mean_z(const ShotResult& r, std::size_t l) {
  if (l >= r.n_qubits) {
    throw ValidationError("qubit " + std::to_string(l) + " outside " +
                          std::to_string(r.n_qubits) + "-bit outcomes");
  }
  if (r.shots == 0) throw ValidationError("no shots recorded");
  std::int64_t balance = 0;
  for (const auto& [outcome, c] : r.counts) {
    balance += ((outcome >> l) & 1U) ? -static_cast<std::int64_t>(c) : static_cast<std::int64_t>(c);
  }
  const double n = static_cast<double>(r.shots);
  const double mean = static_cast<double>(balance) / n;
  return {mean, std::sqrt(std::max(0.0, 1.0 - mean * mean) / n)};
}

// Gate noise ------------------------------------------------------------------

/// Runs a circuit shot by shot, inserting a uniformly random non-identity
/// Pauli after a single-qubit gate with probability gate_error[q], and a
/// random non-identity two-qubit Pauli after a CX with probability
/// cx_error[(c, t)]. Shots without any error event are drawn from the
/// cached noiseless distribution. Zero-rate gates consume no randomness, so
/// an all-zero calibration reproduces sample_z() with the same seed.
class NoisyExecutor {
 public:
  NoisyExecutor(Circuit circuit, CalibrationData cal, std::uint64_t seed,
                std::size_t max_qubits = kDefaultMaxQubits)
      : circuit_(std::move(circuit)), cal_(std::move(cal)), seed_(seed), max_qubits_(max_qubits) {
    rates_.reserve(circuit_.size());
    for (const auto& g : circuit_.gates()) {
      if (g.kind == GateKind::CX) {
        auto p = cal_.cx(g.control, g.target);
        if (!p) {
          throw ValidationError("calibration has no CX error for " + std::to_string(g.control) +
                                "-" + std::to_string(g.target));
        }
        rates_.push_back(*p);
      } else {
        if (g.target >= cal_.gate_error.size()) {
          throw ValidationError("calibration has no gate error for qubit " +
                                std::to_string(g.target));
        }
        rates_.push_back(cal_.gate_error[g.target]);
      }
    }
  }

  ShotResult run(std::uint64_t shots) const {
    if (shots == 0) throw ValidationError("shots must be positive");
    auto clean = StateVector::zero(circuit_.n_qubits(), max_qubits_);
    run_circuit(clean, circuit_);
    const auto clean_cdf = detail::cumulative_probabilities(clean);

    Rng rng(seed_);
    ShotResult r{circuit_.n_qubits(), shots, seed_, {}};
    std::vector<std::pair<std::size_t, std::uint64_t>> events;  // (gate, pauli code)
    for (std::uint64_t k = 0; k < shots; ++k) {
      events.clear();
      for (std::size_t gi = 0; gi < rates_.size(); ++gi) {
        if (rates_[gi] > 0.0 && rng.uniform() < rates_[gi]) {
          const bool two = circuit_.gates()[gi].kind == GateKind::CX;
          events.emplace_back(gi, 1 + rng.below(two ? 15 : 3));
        }
      }
      if (events.empty()) {
        ++r.counts[detail::draw(clean_cdf, rng)];
        continue;
      }
      auto s = StateVector::zero(circuit_.n_qubits(), max_qubits_);
      std::size_t next = 0;
      for (std::size_t gi = 0; gi < circuit_.size(); ++gi) {
        const auto& g = circuit_.gates()[gi];
        s.apply(g);
        if (next < events.size() && events[next].first == gi) {
          const auto code = events[next].second;
          if (g.kind == GateKind::CX) {
            apply_pauli(s, g.control, code / 4);
            apply_pauli(s, g.target, code % 4);
          } else {
            apply_pauli(s, g.target, code);
          }
          ++next;
        }
      }
      s.check_normalized();
      ++r.counts[detail::draw(detail::cumulative_probabilities(s), rng)];
    }
    return r;
  }

  const Circuit& circuit() const noexcept { return circuit_; }

 private:
  // 0 = I, 1 = X, 2 = Y, 3 = Z; applied up to global phase.
  static void apply_pauli(StateVector& s, std::size_t q, std::uint64_t code) {
    switch (code) {
      case 1: s.apply(Gate::rx(q, std::numbers::pi)); break;
      case 2: s.apply(Gate::ry(q, std::numbers::pi)); break;
      case 3: s.apply(Gate::p(q, std::numbers::pi)); break;
      default: break;
    }
  }

  Circuit circuit_;
  CalibrationData cal_;
  std::uint64_t seed_;
  std::size_t max_qubits_;
  std::vector<double> rates_;
};

inline NoisyExecutor apply_depolarizing_noise(Circuit c, CalibrationData cal, std::uint64_t seed,
                                              std::size_t max_qubits = kDefaultMaxQubits) {
  return NoisyExecutor(std::move(c), std::move(cal), seed, max_qubits);
}

// Entanglement from shots ----------------------------------------------------

struct ShotOptions {
  std::uint64_t shots = kDefaultShots;
  std::uint64_t seed = kDefaultSeed;
  std::optional<CalibrationData> calibration;  // readout noise + orientation
  bool gate_noise = false;                     // needs calibration
  std::size_t max_qubits = kDefaultMaxQubits;
};

/// E = (1 - min(1, |m|)) / 2 for estimated means, plus its first-order
/// standard error. Estimated means are not a valid Bloch vector in general
/// (|m| can exceed 1 by sampling noise), so no norm check is applied here.
inline std::pair<double, double> entanglement_with_error(const BlochVector& m,
                                                         const std::array<double, 3>& sigma) {
  const double norm = m.norm();
  const double value = 0.5 * (1.0 - std::min(1.0, norm));
  double err = 0.0;
  if (norm > 0.0) {
    const double gx = m.x / norm, gy = m.y / norm, gz = m.z / norm;
    err = 0.5 * std::sqrt(gx * gx * sigma[0] * sigma[0] + gy * gy * sigma[1] * sigma[1] +
                          gz * gz * sigma[2] * sigma[2]);
  } else {
    err = 0.5 * std::max({sigma[0], sigma[1], sigma[2]});
  }
  return {value, err};
}

/// Measurement record of one axis experiment for spin l.
inline ShotResult run_axis_experiment(const Graph& g, double phi, Vertex l, Axis axis,
                                      const ShotOptions& opt) {
  const CalibrationData* cal = opt.calibration ? &*opt.calibration : nullptr;
  auto circuit = synthesize_graph_circuit(g, phi, cal);
  circuit.append(measurement_prelude(axis, l, g.n_vertices()));

  const auto tag = static_cast<std::uint64_t>(axis);
  ShotResult r;
  if (opt.gate_noise) {
    if (cal == nullptr) throw ValidationError("gate noise needs calibration data");
    r = NoisyExecutor(circuit, *cal, derive_seed(opt.seed, {tag, 2}), opt.max_qubits)
            .run(opt.shots);
  } else {
    auto s = StateVector::zero(g.n_vertices(), opt.max_qubits);
    run_circuit(s, circuit);
    r = sample_z(s, opt.shots, derive_seed(opt.seed, {tag, 0}));
  }
  if (cal != nullptr) r = corrupt_readout(r, *cal, derive_seed(opt.seed, {tag, 1}));
  return r;
}

inline EntanglementEstimate estimate_entanglement_shots(const Graph& g, double phi, Vertex l,
                                                        const ShotOptions& opt) {
  g.check_vertex(l);
  if (opt.shots == 0) throw ValidationError("shots must be positive");
  if (opt.calibration) {
    opt.calibration->validate();
    if (opt.calibration->n_qubits() < g.n_vertices()) {
      throw ValidationError("calibration covers fewer qubits than the graph has vertices");
    }
  }
  if (g.n_vertices() > opt.max_qubits) {
    throw ResourceError(std::to_string(g.n_vertices()) + " qubits exceeds the cap of " +
                        std::to_string(opt.max_qubits));
  }

  std::array<double, 3> mean{};
  std::array<double, 3> sigma{};
  for (Axis axis : {Axis::Z, Axis::X, Axis::Y}) {
    auto m = estimate_mean_z(run_axis_experiment(g, phi, l, axis, opt), l);
    const auto idx = static_cast<std::size_t>(axis);
    mean[idx] = m.mean;
    sigma[idx] = m.std_error;
  }

  EntanglementEstimate est;
  est.spin = l;
  est.method = Method::Shots;
  est.bloch = {mean[0], mean[1], mean[2]};
  auto [value, err] = entanglement_with_error(est.bloch, sigma);
  est.value = value;
  est.std_error = err;
  est.shots = opt.shots;
  return est;
}

}  // namespace graphent
