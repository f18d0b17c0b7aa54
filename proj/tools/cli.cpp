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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphent/graphent.hpp"
#include "json.hpp"

namespace graphent::cli {
namespace {

struct GraphSource {
  std::string file;
  std::string preset;
  std::string format = "auto";
};

struct CommonOptions {
  std::optional<std::size_t> max_qubits;
  std::string calibration_file;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t shots = kDefaultShots;
  bool gate_noise = false;
  std::string out_file;
};

std::string read_file(const std::string& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(std::string("cannot read ") + what + " file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const GraphSource& src) {
  if (src.file.empty() == src.preset.empty()) {
    throw UsageError("give exactly one of --graph FILE or --preset NAME");
  }
  if (!src.preset.empty()) {
    try {
      return preset(src.preset);
    } catch (const ValidationError& e) {
      throw UsageError(e.what());
    }
  }
  const auto text = read_file(src.file, "graph");
  if (src.format == "auto") return parse_graph(text);
  auto fmt = graph_format_from_name(src.format);
  if (!fmt) throw UsageError("unknown graph format '" + src.format + "'");
  return parse_graph(text, *fmt);
}

std::optional<CalibrationData> load_calibration(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return parse_calibration(read_file(path, "calibration"));
}

double phi_flag(const std::string& text) {
  try {
    return parse_phi(text);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
}

std::size_t qubit_cap(const CommonOptions& opt) {
  if (opt.max_qubits) {
    if (*opt.max_qubits == 0 || *opt.max_qubits > 62) {
      throw UsageError("--max-qubits must be in [1, 62]");
    }
    return *opt.max_qubits;
  }
  return max_qubits_from_env();
}

/// Writes to --out when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ValidationError("cannot write output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw ValidationError("write to output failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

EntanglementEstimate evaluate(const Graph& g, double phi, Vertex spin, Method mode,
                              const CommonOptions& common,
                              const std::optional<CalibrationData>& cal, std::size_t cap,
                              std::uint64_t seed) {
  g.check_vertex(spin);
  switch (mode) {
    case Method::Analytic:
      return analytic_estimate(g, phi, spin);
    case Method::Exact:
      return exact_entanglement(g, phi, spin, cap);
    case Method::Shots: {
      if (common.shots == 0) throw UsageError("--shots must be positive");
      if (common.gate_noise && !cal) throw UsageError("--gate-noise needs --calibration");
      ShotOptions opt;
      opt.shots = common.shots;
      opt.seed = seed;
      opt.calibration = cal;
      opt.gate_noise = common.gate_noise;
      opt.max_qubits = cap;
      return estimate_entanglement_shots(g, phi, spin, opt);
    }
  }
  throw ConsistencyError("unhandled mode");
}

nlohmann::json record_json(double phi, const EntanglementEstimate& est, std::uint64_t seed,
                           const Graph& g) {
  nlohmann::json j;
  j["phi"] = phi;
  j["spin"] = est.spin;
  j["mode"] = method_name(est.method);
  j["bloch"] = {est.bloch.x, est.bloch.y, est.bloch.z};
  j["entanglement"] = est.value;
  j["std_error"] = est.std_error ? nlohmann::json(*est.std_error) : nlohmann::json(nullptr);
  j["shots"] = est.shots ? nlohmann::json(*est.shots) : nlohmann::json(nullptr);
  j["seed"] = seed;
  j["graph"] = to_json(g);
  return j;
}

std::string csv_row(double phi, const EntanglementEstimate& est, std::uint64_t seed) {
  std::string row;
  auto cell = [&row](const std::string& v) {
    if (!row.empty()) row += ',';
    row += v;
  };
  cell(format_real(phi));
  cell(std::to_string(est.spin));
  cell(method_name(est.method));
  cell(format_real(est.bloch.x));
  cell(format_real(est.bloch.y));
  cell(format_real(est.bloch.z));
  cell(format_real(est.bloch.norm()));
  cell(format_real(est.value));
  row += ',';
  if (est.std_error) row += format_real(*est.std_error);
  row += ',';
  if (est.shots) row += std::to_string(*est.shots);
  cell(std::to_string(seed));
  return row;
}

void add_graph_flags(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.file, "Graph file (edge-list, JSON or adjacency)");
  cmd->add_option("--preset", src.preset,
                  "Preset graph: valencia, complete(N), path(N), ring(N)");
  cmd->add_option("--graph-format", src.format, "auto | edge-list | json | adjacency")
      ->capture_default_str();
}

void add_common_flags(CLI::App* cmd, CommonOptions& c) {
  cmd->add_option("--shots", c.shots, "Shots per axis experiment")->capture_default_str();
  cmd->add_option("--calibration", c.calibration_file, "Calibration JSON (readout noise)");
  cmd->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  cmd->add_flag("--gate-noise", c.gate_noise,
                "Add depolarizing gate/CX noise from the calibration (shots mode)");
  cmd->add_option("--max-qubits", c.max_qubits, "Qubit cap (overrides GRAPHENT_MAX_QUBITS)");
}

const std::vector<std::string> kModeNames = {"analytic", "exact", "shots"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ising graph states and the geometric measure of entanglement", "graphent"};
  app.require_subcommand(1);

  GraphSource src;
  CommonOptions common;
  std::string phi_text;
  std::string sweep_text;
  std::vector<Vertex> spins;
  std::vector<std::string> modes;
  ValidateOptions vopt;

  auto* entangle = app.add_subcommand("entangle", "Entanglement of one spin at one angle (JSON)");
  add_graph_flags(entangle, src);
  add_common_flags(entangle, common);
  entangle->add_option("--phi", phi_text, "Angle: radians or pi expression (pi/2, 2pi/3)")
      ->required();
  entangle->add_option("--spin", spins, "Spin index")->required()->expected(1);
  entangle->add_option("--mode", modes, "analytic | exact | shots")
      ->check(CLI::IsMember(kModeNames))
      ->expected(1);
  entangle->add_option("--out", common.out_file, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Entanglement over an angle grid (CSV)");
  add_graph_flags(sweep, src);
  add_common_flags(sweep, common);
  sweep->add_option("--sweep", sweep_text, "START:STOP:COUNT, inclusive")->required();
  sweep->add_option("--spin", spins, "Spin index (repeatable, default all)");
  sweep->add_option("--mode", modes, "Mode (repeatable, default analytic)")
      ->check(CLI::IsMember(kModeNames));
  sweep->add_option("--out", common.out_file, "CSV output file (default stdout)");

  auto* synth = app.add_subcommand("synthesize", "Gate listing of the state-preparation circuit");
  add_graph_flags(synth, src);
  synth->add_option("--phi", phi_text, "Angle")->required();
  synth->add_option("--calibration", common.calibration_file, "Calibration JSON");
  synth->add_option("--out", common.out_file, "Output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Oracle-equivalence checks on random graphs");
  validate->add_option("--max-n", vopt.max_n, "Largest random graph")->capture_default_str();
  validate->add_option("--trials", vopt.trials, "Number of random graphs")->capture_default_str();
  validate->add_option("--seed", vopt.seed, "RNG seed")->capture_default_str();
  validate->add_option("--max-qubits", common.max_qubits, "Qubit cap");

  std::vector<std::string> argv_store{"graphent"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (entangle->parsed()) {
      const auto cap = qubit_cap(common);
      const auto g = load_graph(src);
      const auto cal = load_calibration(common.calibration_file);
      const double phi = phi_flag(phi_text);
      const auto mode = modes.empty() ? Method::Exact : *method_from_name(modes.front());
      const auto est = evaluate(g, phi, spins.front(), mode, common, cal, cap, common.seed);
      Sink sink(common.out_file, out);
      sink.get() << record_json(phi, est, common.seed, g).dump() << '\n';
      sink.finish();
    } else if (sweep->parsed()) {
      const auto cap = qubit_cap(common);
      const auto g = load_graph(src);
      const auto cal = load_calibration(common.calibration_file);
      SweepSpec spec = [&] {
        try {
          return SweepSpec::parse(sweep_text);
        } catch (const ValidationError& e) {
          throw UsageError(e.what());
        }
      }();
      if (spins.empty()) {
        for (Vertex l = 0; l < g.n_vertices(); ++l) spins.push_back(l);
      }
      for (auto l : spins) g.check_vertex(l);
      std::vector<Method> methods;
      for (const auto& m : modes) methods.push_back(*method_from_name(m));
      if (methods.empty()) methods.push_back(Method::Analytic);

      std::vector<std::string> rows;
      for (std::size_t i = 0; i < spec.count; ++i) {
        const double phi = spec.at(i);
        for (auto l : spins) {
          for (auto m : methods) {
            const auto seed = m == Method::Shots ? derive_seed(common.seed, {i, l}) : common.seed;
            rows.push_back(csv_row(phi, evaluate(g, phi, l, m, common, cal, cap, seed), seed));
          }
        }
      }
      Sink sink(common.out_file, out);
      sink.get() << kCsvHeader << '\n';
      for (const auto& r : rows) sink.get() << r << '\n';
      sink.finish();
    } else if (synth->parsed()) {
      const auto g = load_graph(src);
      const auto cal = load_calibration(common.calibration_file);
      const double phi = phi_flag(phi_text);
      if (cal && cal->n_qubits() < g.n_vertices()) {
        throw ValidationError("calibration covers fewer qubits than the graph has vertices");
      }
      Sink sink(common.out_file, out);
      sink.get() << to_text(synthesize_graph_circuit(g, phi, cal));
      sink.finish();
    } else if (validate->parsed()) {
      if (vopt.trials == 0) throw UsageError("--trials must be positive");
      if (vopt.max_n < 2) throw UsageError("--max-n must be at least 2");
      const auto cap = qubit_cap(common);
      if (vopt.max_n > cap) {
        throw ResourceError("--max-n " + std::to_string(vopt.max_n) + " exceeds the qubit cap " +
                            std::to_string(cap));
      }
      return run_validation(vopt, out) ? kOk : kConsistency;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kConsistency;
  }
  return kOk;
}

}  // namespace graphent::cli
