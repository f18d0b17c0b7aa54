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

#include <gtest/gtest.h>

#include <fstream>
#include <numbers>
#include <sstream>

#include "graphent/calibration.hpp"
#include "graphent/phi.hpp"

namespace graphent {
namespace {

using std::numbers::pi;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Calibration, BundledFixtureMatchesTable) {
  const auto cal = parse_calibration(slurp(GRAPHENT_DATA_DIR "/valencia_calibration.json"));
  EXPECT_EQ(cal, valencia_calibration());
  EXPECT_EQ(cal.readout_error[1], 0.0292);
  EXPECT_EQ(cal.gate_error[2], 10.98e-4);
  EXPECT_EQ(*cal.cx(3, 4), 23.68e-3);
  EXPECT_FALSE(cal.cx(0, 2).has_value());
}

TEST(Calibration, ReadoutOnlyFixture) {
  const auto cal = parse_calibration(slurp(GRAPHENT_DATA_DIR "/valencia_readout_only.json"));
  EXPECT_EQ(cal.readout_error, valencia_calibration().readout_error);
  for (double g : cal.gate_error) EXPECT_EQ(g, 0.0);
}

TEST(Calibration, JsonRoundTrip) {
  const auto cal = valencia_calibration();
  EXPECT_EQ(parse_calibration(to_json(cal).dump()), cal);
}

TEST(Calibration, Rejects) {
  EXPECT_THROW(parse_calibration("[]"), ValidationError);
  EXPECT_THROW(parse_calibration("{"), ValidationError);
  EXPECT_THROW(parse_calibration(R"({"gate_error": [0.1]})"), ValidationError);
  EXPECT_THROW(parse_calibration(R"({"readout_error": [1.5], "gate_error": [0.1]})"),
               ValidationError);
  EXPECT_THROW(parse_calibration(R"({"readout_error": [0.1], "gate_error": [-0.1]})"),
               ValidationError);
  EXPECT_THROW(parse_calibration(R"({"readout_error": [0.1, 0.2], "gate_error": [0.1]})"),
               ValidationError);
  EXPECT_THROW(parse_calibration(
                   R"({"readout_error": [0.1, 0.2], "gate_error": [0.1, 0.1], "cx_error": {"0_1": 0.1}})"),
               ValidationError);
  EXPECT_THROW(parse_calibration(
                   R"({"readout_error": [0.1, 0.2], "gate_error": [0.1, 0.1], "cx_error": {"0-2": 0.1}})"),
               ValidationError);
  EXPECT_THROW(parse_calibration(
                   R"({"readout_error": [0.1, 0.2], "gate_error": [0.1, 0.1], "cx_error": {"1-1": 0.1}})"),
               ValidationError);
  EXPECT_THROW(parse_calibration(R"({"readout_error": ["a"], "gate_error": [0.1]})"),
               ValidationError);
}

TEST(Phi, Expressions) {
  EXPECT_EQ(parse_phi("1.25"), 1.25);
  EXPECT_EQ(parse_phi("-0.5"), -0.5);
  EXPECT_EQ(parse_phi("pi"), pi);
  EXPECT_EQ(parse_phi("-pi"), -pi);
  EXPECT_EQ(parse_phi("pi/2"), pi / 2);
  EXPECT_DOUBLE_EQ(parse_phi("2pi/3"), 2 * pi / 3);
  EXPECT_DOUBLE_EQ(parse_phi("2*pi"), 2 * pi);
  EXPECT_DOUBLE_EQ(parse_phi(" 0.5pi "), pi / 2);
  EXPECT_DOUBLE_EQ(parse_phi("+3pi/4"), 3 * pi / 4);
  for (const char* bad : {"", "abc", "pi/", "pi/0", "2pi3", "1.0x", "--1", "pi*2"}) {
    EXPECT_THROW(parse_phi(bad), ValidationError) << bad;
  }
}

TEST(Sweep, InclusiveGrid) {
  auto s = SweepSpec::parse("0:2pi:64");
  EXPECT_EQ(s.count, 64u);
  auto pts = s.points();
  EXPECT_EQ(pts.front(), 0.0);
  EXPECT_EQ(pts.back(), 2 * pi);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_NEAR(pts[i] - pts[i - 1], 2 * pi / 63, 1e-14);
  }
  EXPECT_EQ(SweepSpec::parse("-1:1:2").points(), (std::vector<double>{-1.0, 1.0}));
  EXPECT_THROW(SweepSpec::parse("0:1:1"), ValidationError);
  EXPECT_THROW(SweepSpec::parse("1:0:5"), ValidationError);
  EXPECT_THROW(SweepSpec::parse("0:1"), ValidationError);
  EXPECT_THROW(SweepSpec::parse("0:1:x"), ValidationError);
}

}  // namespace
}  // namespace graphent
