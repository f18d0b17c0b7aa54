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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "graphent/graphent.hpp"
#include "json.hpp"

namespace graphent::cli {
namespace {

using std::numbers::pi;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("graphent_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

const std::string kCalibration = GRAPHENT_DATA_DIR "/valencia_calibration.json";
const std::string kReadoutOnly = GRAPHENT_DATA_DIR "/valencia_readout_only.json";

TEST(Entangle, AnalyticValenciaHalfPi) {
  auto r = invoke({"entangle", "--preset", "valencia", "--phi", "pi/2", "--spin", "1", "--mode",
                   "analytic"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["entanglement"].get<double>(), 0.5, 1e-15);
  EXPECT_EQ(j["mode"], "analytic");
  EXPECT_EQ(j["spin"], 1);
  EXPECT_TRUE(j["std_error"].is_null());
  EXPECT_TRUE(j["shots"].is_null());
  EXPECT_EQ(j["seed"], kDefaultSeed);
  EXPECT_EQ(j["graph"]["n"], 5);
  EXPECT_EQ(j["graph"]["edges"].size(), 4u);
  EXPECT_EQ(j["bloch"].size(), 3u);
}

TEST(Entangle, ExactValues) {
  auto r = invoke({"entangle", "--preset", "valencia", "--phi", "0", "--spin", "3", "--mode", "exact"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["entanglement"].get<double>(), 0.0);

  r = invoke({"entangle", "--preset", "complete(5)", "--phi", "pi/4", "--spin", "0", "--mode", "exact"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["entanglement"].get<double>(), 0.375, 1e-12);
  EXPECT_NEAR(j["entanglement"].get<double>(), 0.5 * (1 - std::pow(std::cos(pi / 4), 4)), 1e-12);
  EXPECT_NEAR(j["phi"].get<double>(), pi / 4, 0.0);
}

TEST(Entangle, DefaultModeIsExactAndOutputIsOneLine) {
  auto r = invoke({"entangle", "--preset", "path(2)", "--phi", "1", "--spin", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(lines_of(r.out).size(), 1u);
  EXPECT_EQ(nlohmann::json::parse(r.out)["mode"], "exact");
}

TEST(Entangle, ShotsRecord) {
  auto r = invoke({"entangle", "--preset", "valencia", "--phi", "pi/4", "--spin", "1", "--mode",
                   "shots", "--shots", "20000", "--seed", "8", "--calibration", kCalibration});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["shots"], 20000);
  EXPECT_EQ(j["seed"], 8);
  EXPECT_GT(j["std_error"].get<double>(), 0.0);
  // Deterministic replay.
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--phi", "pi/4", "--spin", "1", "--mode",
                    "shots", "--shots", "20000", "--seed", "8", "--calibration", kCalibration})
                .out,
            r.out);
}

TEST(Entangle, GateNoiseFlag) {
  auto r = invoke({"entangle", "--preset", "valencia", "--phi", "0", "--spin", "1", "--mode",
                   "shots", "--shots", "2000", "--gate-noise"});
  EXPECT_EQ(r.code, kUsage);
  r = invoke({"entangle", "--preset", "valencia", "--phi", "0", "--spin", "1", "--mode", "shots",
              "--shots", "2000", "--gate-noise", "--calibration", kCalibration});
  EXPECT_EQ(r.code, kOk) << r.err;
}

TEST(Entangle, GraphFiles) {
  TempDir dir;
  for (const auto& [name, text] : std::vector<std::pair<std::string, std::string>>{
           {"v.edges", "5\n0 1\n1 2\n1 3\n3 4\n"},
           {"v.json", R"({"n": 5, "edges": [[0,1],[1,2],[1,3],[3,4]]})"},
           {"v.adj", "5\n0 1 0 0 0\n1 0 1 1 0\n0 1 0 0 0\n0 1 0 0 1\n0 0 0 1 0\n"}}) {
    auto r = invoke({"entangle", "--graph", dir.write(name, text), "--phi", "pi/3", "--spin", "1",
                     "--mode", "analytic"});
    ASSERT_EQ(r.code, kOk) << name << ": " << r.err;
    EXPECT_NEAR(nlohmann::json::parse(r.out)["entanglement"].get<double>(), 0.4375, 1e-15);
  }
  auto r = invoke({"entangle", "--graph", GRAPHENT_DATA_DIR "/complete5.adj", "--graph-format",
                   "adjacency", "--phi", "1", "--spin", "2", "--mode", "analytic"});
  EXPECT_EQ(r.code, kOk) << r.err;
}

TEST(Entangle, ExitCodes) {
  TempDir dir;
  const auto loop = dir.write("loop.edges", "3\n1 1\n");
  EXPECT_EQ(invoke({"entangle", "--graph", loop, "--phi", "1", "--spin", "0"}).code, kValidation);
  EXPECT_EQ(invoke({"entangle", "--graph", dir.path("missing"), "--phi", "1", "--spin", "0"}).code,
            kValidation);
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--phi", "1", "--spin", "9"}).code,
            kValidation);
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--phi", "one", "--spin", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--spin", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"entangle", "--phi", "1", "--spin", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--graph", loop, "--phi", "1", "--spin", "0"})
                .code,
            kUsage);
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--phi", "1", "--spin", "0", "--mode",
                    "magic"})
                .code,
            kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--phi", "1", "--spin", "0",
                    "--max-qubits", "4"})
                .code,
            kResource);
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--phi", "1", "--spin", "0", "--mode",
                    "analytic", "--max-qubits", "4"})
                .code,
            kOk);
  const auto bad_cal = dir.write("cal.json", R"({"readout_error": [2], "gate_error": [0]})");
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--phi", "1", "--spin", "0", "--mode",
                    "shots", "--calibration", bad_cal})
                .code,
            kValidation);
  EXPECT_EQ(invoke({"entangle", "--preset", "valencia", "--phi", "1", "--spin", "0", "--out",
                    dir.path("no/such/dir/out.json")})
                .code,
            kValidation);
}

TEST(Entangle, EnvironmentQubitCap) {
  ::setenv(kMaxQubitsEnv, "4", 1);
  auto r = invoke({"entangle", "--preset", "valencia", "--phi", "1", "--spin", "0"});
  EXPECT_EQ(r.code, kResource);
  r = invoke({"entangle", "--preset", "valencia", "--phi", "1", "--spin", "0", "--max-qubits", "5"});
  EXPECT_EQ(r.code, kOk);
  ::unsetenv(kMaxQubitsEnv);
}

TEST(Entangle, HelpExitsCleanly) {
  auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(Sweep, ValenciaAnalyticCurves) {
  TempDir dir;
  const auto out = dir.path("sweep.csv");
  auto r = invoke({"sweep", "--preset", "valencia", "--sweep", "0:2pi:64", "--spin", "4", "--spin",
                   "3", "--spin", "1", "--mode", "analytic", "--out", out});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  auto lines = lines_of(buf.str());
  ASSERT_EQ(lines.size(), 1u + 64 * 3);
  EXPECT_EQ(lines[0], kCsvHeader);
  const std::size_t spins[] = {4, 3, 1};
  const int power[] = {1, 2, 3};
  for (std::size_t i = 0; i < 64; ++i) {
    for (std::size_t s = 0; s < 3; ++s) {
      auto cells = split_csv(lines[1 + i * 3 + s]);
      ASSERT_EQ(cells.size(), 11u);
      const double phi = std::stod(cells[0]);
      EXPECT_NEAR(phi, 2 * pi * static_cast<double>(i) / 63.0, 1e-14);
      EXPECT_EQ(cells[1], std::to_string(spins[s]));
      EXPECT_EQ(cells[2], "analytic");
      EXPECT_NEAR(std::stod(cells[7]), 0.5 * (1 - std::pow(std::abs(std::cos(phi)), power[s])), 1e-14);
      EXPECT_EQ(cells[8], "");
      EXPECT_EQ(cells[9], "");
      EXPECT_EQ(cells[10], "1");
    }
  }
}

TEST(Sweep, CompleteGraphAndModeAgreement) {
  auto r = invoke({"sweep", "--preset", "complete(5)", "--sweep", "-pi:pi:33", "--spin", "1",
                   "--mode", "analytic", "--mode", "exact"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 1u + 33 * 2);
  double worst = 0.0;
  for (std::size_t i = 0; i < 33; ++i) {
    auto a = split_csv(lines[1 + 2 * i]);
    auto e = split_csv(lines[2 + 2 * i]);
    EXPECT_EQ(a[2], "analytic");
    EXPECT_EQ(e[2], "exact");
    EXPECT_EQ(a[0], e[0]);
    const double phi = std::stod(a[0]);
    EXPECT_NEAR(std::stod(a[7]), 0.5 * (1 - std::pow(std::cos(phi), 4)), 1e-14);
    worst = std::max(worst, std::abs(std::stod(a[7]) - std::stod(e[7])));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Sweep, DefaultsToAllSpinsAnalytic) {
  auto r = invoke({"sweep", "--preset", "ring(4)", "--sweep", "0:1:3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 1u + 3 * 4);
  EXPECT_EQ(split_csv(lines[4])[1], "3");
  EXPECT_EQ(split_csv(lines[5])[0], "0.5");
}

TEST(Sweep, ShotsRowsAreDeterministicAndReplayable) {
  const std::vector<std::string> args{"sweep", "--preset", "valencia", "--sweep", "0:pi:4",
                                      "--spin", "1", "--mode", "shots", "--shots", "3000",
                                      "--seed", "17", "--calibration", kReadoutOnly};
  auto a = invoke(args);
  auto b = invoke(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto lines = lines_of(a.out);
  ASSERT_EQ(lines.size(), 5u);
  auto row = split_csv(lines[3]);
  EXPECT_EQ(row[9], "3000");
  EXPECT_FALSE(row[8].empty());
  // The seed column replays the row through `entangle`.
  auto one = invoke({"entangle", "--preset", "valencia", "--phi", row[0], "--spin", "1", "--mode",
                     "shots", "--shots", "3000", "--seed", row[10], "--calibration", kReadoutOnly});
  ASSERT_EQ(one.code, kOk) << one.err;
  auto j = nlohmann::json::parse(one.out);
  EXPECT_EQ(format_real(j["entanglement"].get<double>()), row[7]);
  EXPECT_EQ(format_real(j["bloch"][2].get<double>()), row[5]);
}

TEST(Sweep, Errors) {
  EXPECT_EQ(invoke({"sweep", "--preset", "valencia", "--sweep", "1:0:5"}).code, kUsage);
  EXPECT_EQ(invoke({"sweep", "--preset", "valencia", "--sweep", "0:1:1"}).code, kUsage);
  EXPECT_EQ(invoke({"sweep", "--preset", "valencia"}).code, kUsage);
  EXPECT_EQ(invoke({"sweep", "--preset", "valencia", "--sweep", "0:1:3", "--spin", "5"}).code,
            kValidation);
  TempDir dir;
  EXPECT_EQ(invoke({"sweep", "--preset", "valencia", "--sweep", "0:1:3", "--out",
                    dir.path("missing/x.csv")})
                .code,
            kValidation);
}

TEST(Synthesize, ValenciaWithCalibration) {
  auto r = invoke({"synthesize", "--preset", "valencia", "--phi", "0.5", "--calibration", kCalibration});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 20u);
  EXPECT_EQ(lines[0], "cx q[1], q[0]");
  EXPECT_EQ(lines[1], "h q[1]");
  EXPECT_EQ(lines[2], "p(0.5) q[1]");
  EXPECT_EQ(lines[3], "h q[1]");
  EXPECT_EQ(lines[4], "cx q[1], q[0]");
  // Edge (3, 4): qubit 3 has the lower gate error.
  EXPECT_EQ(lines[15], "cx q[3], q[4]");
  // The listing parses back into the circuit that was synthesized.
  EXPECT_EQ(parse_circuit_text(r.out, 5),
            synthesize_graph_circuit(presets::valencia(), 0.5, valencia_calibration()));
}

TEST(Synthesize, EmptyAndComplete) {
  auto r = invoke({"synthesize", "--preset", "complete(1)", "--phi", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "");
  r = invoke({"synthesize", "--preset", "complete(5)", "--phi", "pi/3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(lines_of(r.out).size(), 50u);
  EXPECT_EQ(invoke({"synthesize", "--preset", "complete(6)", "--phi", "1", "--calibration",
                    kCalibration})
                .code,
            kValidation);
}

TEST(Validate, Report) {
  auto r = invoke({"validate", "--max-n", "5", "--trials", "20", "--seed", "3"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("analytic_vs_exact"), std::string::npos);
  EXPECT_NE(r.out.find("validate: PASS"), std::string::npos);
  EXPECT_EQ(invoke({"validate", "--trials", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"validate", "--max-n", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"validate", "--max-n", "40"}).code, kResource);
  EXPECT_EQ(invoke({"validate", "--max-n", "8", "--max-qubits", "6"}).code, kResource);
}

}  // namespace
}  // namespace graphent::cli
