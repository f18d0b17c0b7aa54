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

// Randomized oracle-equivalence report behind `graphent validate`.

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "graphent/graphent.hpp"

namespace graphent::cli {
namespace {

struct Property {
  std::string name;
  double threshold;
  double worst = 0.0;

  void observe(double deviation) { worst = std::max(worst, deviation); }
  bool ok() const { return worst <= threshold; }
};

Graph random_graph(Rng& rng, std::size_t max_n) {
  const std::size_t n = 2 + rng.below(max_n - 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.uniform() < 0.5) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

StateVector random_qubit(Rng& rng) {
  // Uniform on the Bloch sphere.
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phase = 2.0 * std::numbers::pi * rng.uniform();
  const double theta = std::acos(z);
  return StateVector::from_amplitudes(
      {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phase)});
}

}  // namespace

bool run_validation(const ValidateOptions& opt, std::ostream& out) {
  Rng rng(opt.seed);
  Property analytic{"analytic_vs_exact", 1e-10};
  Property transverse{"transverse_vanishing", 1e-12};
  Property circuit{"circuit_vs_exact", 1e-12};
  Property order{"edge_order_independence", 1e-12};
  Property symmetry{"symmetry_exact", 1e-10};
  Property prelude{"prelude_axis_readout", 1e-12};

  constexpr std::size_t kPhiPoints = 25;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const auto g = random_graph(rng, opt.max_n);
    auto shuffled = g.edges();
    for (std::size_t k = shuffled.size(); k > 1; --k) {
      std::swap(shuffled[k - 1], shuffled[rng.below(k)]);
    }
    for (std::size_t j = 0; j < kPhiPoints; ++j) {
      const double phi = 0.25 * static_cast<double>(j);
      const auto exact = exact_entanglement_all(g, phi);
      for (const auto& est : exact) {
        analytic.observe(std::abs(est.value - analytic_entanglement(g.degree(est.spin), phi)));
        transverse.observe(std::max(std::abs(est.bloch.x), std::abs(est.bloch.y)));
      }
      for (double shifted : {-phi, phi + std::numbers::pi, std::numbers::pi - phi}) {
        const auto other = exact_entanglement_all(g, shifted);
        for (std::size_t l = 0; l < exact.size(); ++l) {
          symmetry.observe(std::abs(exact[l].value - other[l].value));
        }
      }

      const auto reference = evolve_graph_exact(StateVector::zero(g.n_vertices()), g, phi);
      const auto synthesized =
          run_circuit(synthesize_graph_circuit(g, phi), StateVector::zero(g.n_vertices()));
      circuit.observe(1.0 - overlap_magnitude(reference, synthesized));

      auto permuted = StateVector::zero(g.n_vertices());
      for (const auto& e : shuffled) evolve_edge_exact_inplace(permuted, e.second, e.first, phi);
      order.observe(1.0 - overlap_magnitude(reference, permuted));
    }
  }

  for (std::size_t t = 0; t < std::max<std::size_t>(opt.trials, 100); ++t) {
    const auto s = random_qubit(rng);
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      const auto rotated = run_circuit(measurement_prelude(axis, 0, 1), s);
      prelude.observe(
          std::abs(expectation_pauli(rotated, Axis::Z, 0) - expectation_pauli(s, axis, 0)));
    }
  }

  bool all_ok = true;
  out << "validate: trials=" << opt.trials << " max_n=" << opt.max_n << " seed=" << opt.seed
      << '\n';
  for (const auto* p : {&analytic, &transverse, &circuit, &order, &symmetry, &prelude}) {
    out << std::left << std::setw(26) << p->name << " worst=" << std::scientific
        << std::setprecision(3) << p->worst << " threshold=" << p->threshold << "  "
        << (p->ok() ? "PASS" : "FAIL") << '\n';
    all_ok = all_ok && p->ok();
  }
  out << (all_ok ? "validate: PASS" : "validate: FAIL") << '\n';
  return all_ok;
}

}  // namespace graphent::cli
