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

#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kaonsim/cli.hpp"
#include "kaonsim/error.hpp"
#include "kaonsim/scenarios.hpp"

namespace kaonsim::cli {
namespace {

using nlohmann::json;
using qmath::Complex;

struct Report {
  Table table;
  std::string title;
  json sidecar;  // written to the JSON path when set
  std::vector<std::string> warnings;
};

std::vector<double> scaled(const std::vector<double>& xs, double factor) {
  std::vector<double> out(xs);
  for (double& x : out) x *= factor;
  return out;
}

Table series_table(const std::vector<double>& x, const Trajectory& traj,
                   const std::vector<std::string>& names, const std::vector<int>& components) {
  Table t;
  t.columns.push_back("t_over_tau1");
  t.values.push_back(x);
  for (std::size_t s = 0; s < names.size(); ++s) {
    t.columns.push_back(names[s]);
    std::vector<double> col(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) col[i] = traj.prob(i, components[s]);
    t.values.push_back(std::move(col));
  }
  return t;
}

json series_json(const RunConfig& cfg, const Table& t) {
  json j;
  j["scenario"] = std::string(scenario_kind_name(cfg.scenario));
  for (std::size_t c = 0; c < t.columns.size(); ++c) j["data"][t.columns[c]] = t.values[c];
  j["columns"] = t.columns;
  return j;
}

void append(std::vector<std::string>& to, const std::vector<std::string>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

Report run_spectrum(const RunConfig& cfg) {
  const auto& s = cfg.spectrum;
  const auto& p = s.junction;
  Report rep;
  append(rep.warnings, junction::warnings(p));
  const junction::Energies e = junction::derived_energies(p);
  const junction::Grid grid = junction::default_grid(p, s.well_index, s.n_points);
  const junction::WellSpectrum spec = junction::solve_well(p, s.well_index, grid, s.n_levels);
  const junction::QubitParams q = junction::reduce_to_qubit(p, spec);

  rep.title = "Well spectrum";
  rep.table.columns = {"n", "E_n", "E_n_minus_E0"};
  rep.table.values.assign(3, {});
  for (int n = 0; n < spec.levels(); ++n) {
    rep.table.values[0].push_back(n);
    rep.table.values[1].push_back(spec.energies[static_cast<std::size_t>(n)]);
    rep.table.values[2].push_back(spec.energies[static_cast<std::size_t>(n)] - spec.energies[0]);
  }

  json& j = rep.sidecar;
  j["scenario"] = "spectrum";
  j["charging_energy_J"] = e.charging;
  j["josephson_energy_J"] = e.josephson;
  j["beta"] = e.beta;
  j["well_index"] = s.well_index;
  j["well_minimum_rad"] = spec.well_minimum;
  j["grid"] = {{"delta_min", grid.delta_min}, {"delta_max", grid.delta_max},
               {"n_points", grid.n_points}};
  j["delta_epsilon_J"] = q.splitting;
  j["delta_epsilon_over_h_Hz"] = q.splitting / junction::constants::kPlanck;
  j["omega_x_rad_per_s"] = q.rabi_frequency;
  j["const_term_J"] = q.const_term;
  j["delta_00_rad"] = q.delta_00;
  j["delta_11_rad"] = q.delta_11;
  j["delta_01_rad"] = q.delta_01;
  j["momentum_identity_residual"] = junction::momentum_identity_residual(spec, e.charging);
  if (s.reference_phi_dc) {
    junction::JunctionParams ref = p;
    ref.phi_dc = *s.reference_phi_dc;
    ref.phi_ac = 0.0;
    const auto ref_spec = junction::solve_well(
        ref, s.well_index, junction::default_grid(ref, s.well_index, s.n_points), 2);
    const double ref_split = ref_spec.energies[1] - ref_spec.energies[0];
    j["reference_delta_epsilon_J"] = ref_split;
    j["delta_m_rad_per_s"] = junction::detuning(q.splitting, ref_split);
  }
  return rep;
}

Report run_regen(const RunConfig& cfg) {
  const double t1 = cfg.regen.t1_over_tau1 * cfg.kaon.tau1;
  const double t2 = cfg.regen.t2_over_tau1 * cfg.kaon.tau1;
  const auto r = scenarios::regeneration(t1, t2, cfg.kaon);
  Report rep;
  rep.warnings = r.warnings;
  rep.title = "Regeneration";
  rep.table.columns = {"t_over_tau1", "C1_re", "C1_im", "C2_re", "C2_im", "abs_C1_over_abs_C2"};
  rep.table.values.assign(6, {});
  auto row = [&](double t, Complex c1, Complex c2) {
    const std::vector<double> v = {t, c1.real(), c1.imag(), c2.real(), c2.imag(),
                                   std::abs(c1) / std::abs(c2)};
    for (std::size_t c = 0; c < v.size(); ++c) rep.table.values[c].push_back(v[c]);
  };
  row(cfg.regen.t1_over_tau1, qmath::inner(kaon::k1_state(), r.before),
      qmath::inner(kaon::k2_state(), r.before));
  row(cfg.regen.t1_over_tau1 + cfg.regen.t2_over_tau1, r.c1, r.c2);
  return rep;
}

Report run_series(const RunConfig& cfg) {
  const std::vector<double> x = cfg.sampling.grid();
  Report rep;
  switch (cfg.scenario) {
    case ScenarioKind::kMixAnalytic: {
      append(rep.warnings, kaon::warnings(cfg.kaon));
      const auto traj =
          scenarios::analytic_mixing_trajectory(scaled(x, cfg.kaon.tau1), cfg.kaon);
      rep.table = series_table(x, traj, {"P_K0", "P_K0bar"}, {0, 1});
      rep.title = "Flavor mixing";
      break;
    }
    case ScenarioKind::kMixQubit: {
      append(rep.warnings, kaon::warnings(cfg.kaon));
      const auto traj = scenarios::single_qubit_sequence(scaled(x, cfg.kaon.tau1), cfg.kaon);
      rep.table = series_table(x, traj, {"P_0", "P_1"}, {0, 1});
      rep.title = "Single-qubit sequence";
      break;
    }
    case ScenarioKind::kMixTwoQubit: {
      append(rep.warnings, dynamics::warnings(cfg.two_qubit));
      const auto traj =
          scenarios::two_qubit_sequence(scaled(x, cfg.two_qubit.tau01), cfg.two_qubit);
      rep.table = series_table(x, traj, {"P_01", "P_10"}, {1, 2});
      rep.title = "Two-qubit sequence";
      break;
    }
    case ScenarioKind::kCpv: {
      append(rep.warnings, kaon::warnings(cfg.kaon));
      const auto traj =
          scenarios::cpv_sequence(scaled(x, cfg.kaon.tau1), cfg.kaon, cfg.epsilon);
      rep.table = series_table(x, traj, {"P_0", "P_1"}, {0, 1});
      rep.title = "Sequence started from K_L";
      break;
    }
    default:
      throw Error("not a time-series scenario");
  }
  rep.sidecar = series_json(cfg, rep.table);
  return rep;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.output.svg.empty() && !is_time_series(cfg.scenario)) {
      throw CliError(kExitSchema, "--svg is only available for time-series scenarios");
    }
    Report rep;
    switch (cfg.scenario) {
      case ScenarioKind::kSpectrum: rep = run_spectrum(cfg); break;
      case ScenarioKind::kRegen: rep = run_regen(cfg); break;
      default: rep = run_series(cfg); break;
    }
    if (!cfg.quiet) {
      for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
    }

    const std::string csv = to_csv(rep.table);
    if (cfg.output.csv.empty()) {
      out << csv;
    } else {
      write_atomic(cfg.output.csv, csv);
    }
    if (!cfg.output.svg.empty()) write_atomic(cfg.output.svg, to_svg(rep.table, rep.title));

    std::string json_path = cfg.output.json;
    if (json_path.empty() && cfg.scenario == ScenarioKind::kSpectrum && !cfg.output.csv.empty()) {
      json_path = cfg.output.csv + ".json";
    }
    if (!json_path.empty()) write_atomic(json_path, rep.sidecar.dump(2) + "\n");
    return kExitOk;
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"kaonsim: neutral-kaon mixing emulated with Josephson phase qubits"};
  std::string scenario_name;
  std::string config_path;
  std::string csv_path;
  std::string svg_path;
  std::string json_path;
  bool quiet = false;
  app.add_option("scenario", scenario_name,
                 "spectrum | mix-analytic | mix-qubit | mix-two-qubit | regen | cpv")
      ->required();
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", csv_path, "CSV output (stdout when omitted)");
  app.add_option("--svg", svg_path, "SVG line chart");
  app.add_option("--json", json_path, "JSON output / spectrum sidecar");
  app.add_flag("--quiet", quiet, "suppress warnings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitSchema;
  }

  const auto kind = parse_scenario_kind(scenario_name);
  if (!kind) {
    err << "error: unknown scenario '" << scenario_name << "'\n";
    return kExitSchema;
  }
  RunConfig cfg;
  try {
    cfg = parse_config(config_path, kind);
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
  if (!csv_path.empty()) cfg.output.csv = csv_path;
  if (!svg_path.empty()) cfg.output.svg = svg_path;
  if (!json_path.empty()) cfg.output.json = json_path;
  cfg.quiet = quiet;
  return run(cfg, out, err);
}

}  // namespace kaonsim::cli
