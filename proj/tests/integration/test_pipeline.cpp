// Copyright 2026 The kaonsim Authors
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


// End-to-end: shipped configs through the CLI entry point, compared with the
// extended-precision golden files.

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kaonsim/cli.hpp"
#include "oracles/oracles.hpp"

namespace {

namespace fs = std::filesystem;

struct Case {
  const char* scenario;
  const char* stem;
  double tolerance;
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.stem; }

fs::path scratch() {
  std::random_device rd;
  const fs::path p = fs::temp_directory_path() / ("kaonsim_it_" + std::to_string(rd()));
  fs::create_directories(p);
  return p;
}

int run_cli(const std::vector<std::string>& args, std::string* err = nullptr) {
  std::vector<const char*> argv{"kaonsim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, e;
  const int code =
      kaonsim::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, e);
  if (err) *err = e.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class ShippedConfig : public ::testing::TestWithParam<Case> {};

TEST_P(ShippedConfig, MatchesGolden) {
  const Case c = GetParam();
  const fs::path dir = scratch();
  const fs::path csv = dir / "out.csv";
  const fs::path svg = dir / "out.svg";
  std::string err;
  const std::string cfg = std::string(KAONSIM_CONFIG_DIR) + "/" + c.stem + ".json";
  ASSERT_EQ(run_cli({c.scenario, "--config", cfg, "--out", csv.string(), "--svg", svg.string(),
                     "--quiet"},
                    &err),
            0)
      << err;

  const auto got = oracle::read_csv(csv.string());
  const auto want = oracle::read_csv(std::string(KAONSIM_GOLDEN_DIR) + "/" + c.stem + ".csv");
  EXPECT_EQ(got.header, want.header);
  ASSERT_EQ(got.rows.size(), want.rows.size());
  ASSERT_EQ(got.rows.size(), 1000u);
  double worst = 0.0;
  for (std::size_t i = 0; i < got.rows.size(); ++i)
    for (std::size_t j = 0; j < got.rows[i].size(); ++j)
      worst = std::max(worst, std::abs(got.rows[i][j] - want.rows[i][j]));
  EXPECT_LT(worst, c.tolerance);

  // One polyline per probability column, one vertex per CSV row.
  const std::string s = slurp(svg);
  std::size_t lines = 0;
  for (auto pos = s.find("<polyline"); pos != std::string::npos; pos = s.find("<polyline", pos + 1)) {
    ++lines;
    const auto open = s.find("points=\"", pos) + 8;
    const auto close = s.find('"', open);
    const std::string pts = s.substr(open, close - open);
    std::size_t vertices = 0;
    std::istringstream is(pts);
    for (std::string v; is >> v;) ++vertices;
    EXPECT_EQ(vertices, got.rows.size());
  }
  EXPECT_EQ(lines, got.header.size() - 1);
  fs::remove_all(dir);
}

INSTANTIATE_TEST_SUITE_P(
    Figures, ShippedConfig,
    ::testing::Values(Case{"mix-analytic", "fig1_mix_analytic", 1e-12},
                      Case{"mix-qubit", "fig2_mix_qubit", 1e-9},
                      Case{"mix-two-qubit", "fig2_two_qubit", 1e-9},
                      Case{"cpv", "fig3_cpv", 1e-9}),
    [](const ::testing::TestParamInfo<Case>& info) { return std::string(info.param.stem); });

TEST(ShippedRegeneration, RatioCrossesThreshold) {
  const fs::path dir = scratch();
  const fs::path csv = dir / "regen.csv";
  ASSERT_EQ(run_cli({"regen", "--config", std::string(KAONSIM_CONFIG_DIR) + "/regeneration.json",
                     "--out", csv.string(), "--quiet"}),
            0);
  const auto t = oracle::read_csv(csv.string());
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_LT(t.rows[0].back(), 1e-4);
  EXPECT_GT(t.rows[1].back(), 0.05);
  fs::remove_all(dir);
}

TEST(ShippedSpectrum, SidecarCarriesQubitParameters) {
  const fs::path dir = scratch();
  const fs::path csv = dir / "spectrum.csv";
  ASSERT_EQ(run_cli({"spectrum", "--config",
                     std::string(KAONSIM_CONFIG_DIR) + "/spectrum_default.json", "--out",
                     csv.string(), "--quiet"}),
            0);
  const auto levels = oracle::read_csv(csv.string());
  ASSERT_EQ(levels.rows.size(), 3u);
  const std::string side = slurp(dir / "spectrum.csv.json");
  const auto key = side.find("\"delta_epsilon_over_h_Hz\":");
  ASSERT_NE(key, std::string::npos);
  const double hz = std::stod(side.substr(key + 26));
  EXPECT_NEAR(hz / 6.617197267056472e9, 1.0, 1e-6);
  fs::remove_all(dir);
}

}  // namespace
