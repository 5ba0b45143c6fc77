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

#ifndef KAONSIM_CLI_HPP_
#define KAONSIM_CLI_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kaonsim/dynamics.hpp"
#include "kaonsim/junction.hpp"
#include "kaonsim/kaon.hpp"

namespace kaonsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMissingFile = 2;
inline constexpr int kExitSchema = 3;
inline constexpr int kExitIo = 4;
inline constexpr int kExitNumeric = 5;

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

enum class ScenarioKind { kSpectrum, kMixAnalytic, kMixQubit, kMixTwoQubit, kRegen, kCpv };

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);
std::string_view scenario_kind_name(ScenarioKind kind);
bool is_time_series(ScenarioKind kind);

struct Sampling {
  double t_max_over_tau1 = 10.0;
  int n_points = 1000;

  /// i * t_max / (n - 1), i = 0..n-1.
  std::vector<double> grid() const;
};

struct SpectrumSettings {
  junction::JunctionParams junction = junction::default_params();
  int well_index = 0;
  int n_points = 4096;
  int n_levels = 3;
  std::optional<double> reference_phi_dc;
};

struct RegenSettings {
  double t1_over_tau1 = 20.0;
  double t2_over_tau1 = 0.1;
};

struct OutputPaths {
  std::string csv;
  std::string svg;
  std::string json;
};

/// Kaon scenarios take times in units of tau1 (tau01 for two qubits);
/// the spectrum scenario is in SI units.
struct RunConfig {
  ScenarioKind scenario = ScenarioKind::kMixAnalytic;
  kaon::KaonParams kaon;
  dynamics::TwoQubitParams two_qubit;
  kaon::CpEpsilon epsilon;
  SpectrumSettings spectrum;
  RegenSettings regen;
  Sampling sampling;
  OutputPaths output;
  bool quiet = false;
};

/// Strict JSON config. `scenario` overrides or must agree with the
/// config's own "scenario" key. Throws CliError with exit code 2 (missing
/// file) or 3 (schema violation, message carries the key path).
RunConfig parse_config(const std::filesystem::path& path,
                       std::optional<ScenarioKind> scenario = std::nullopt);
RunConfig parse_config_text(std::string_view text,
                            std::optional<ScenarioKind> scenario = std::nullopt);

/// Columnar numeric table; column 0 is the abscissa.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // one vector per column

  std::size_t rows() const { return values.empty() ? 0 : values.front().size(); }
};

/// Shortest round-trip decimal form ('.' separator, at most 17 digits).
std::string format_double(double x);
std::string to_csv(const Table& table);
/// Line chart of columns 1.. against column 0, one <polyline> per series;
/// even series solid, odd series dashed.
std::string to_svg(const Table& table, std::string_view title);
/// Writes through a temporary file and renames it into place.
/// Throws CliError(kExitIo) on failure.
void write_atomic(const std::filesystem::path& path, std::string_view content);

/// Executes the scenario and writes the outputs. CSV goes to `out` when no
/// CSV path is configured. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `kaonsim <scenario> --config <path> [--out <csv>] [--svg <path>]
/// [--json <path>] [--quiet]`
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kaonsim::cli

#endif  // KAONSIM_CLI_HPP_
