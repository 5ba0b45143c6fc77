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

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "kaonsim/cli.hpp"

namespace kaonsim::cli {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw CliError(kExitSchema, "config " + (path.empty() ? std::string("<root>") : path) +
                                  ": " + what);
}

// Strict view of one JSON object: every key must be listed as allowed.
class ObjectReader {
 public:
  ObjectReader(const json& node, std::string path, std::initializer_list<const char*> allowed)
      : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) schema_error(path_, "expected an object");
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : node_.items()) {
      if (!keys.count(item.key())) schema_error(child(item.key()), "unknown key");
    }
  }

  bool has(const char* key) const { return node_.contains(key); }
  std::string child(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }
  const json& at(const char* key) const { return node_.at(key); }

  double number(const char* key) const {
    if (!has(key)) schema_error(child(key), "required key missing");
    return as_number(node_.at(key), child(key));
  }
  double number_or(const char* key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  int integer_or(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_number_integer()) schema_error(child(key), "expected an integer");
    return v.get<int>();
  }

  bool boolean_or(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_boolean()) schema_error(child(key), "expected true or false");
    return v.get<bool>();
  }

  std::string string_or(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = node_.at(key);
    if (!v.is_string()) schema_error(child(key), "expected a string");
    return v.get<std::string>();
  }

  // Exactly one of two alternative spellings; returns which one was used.
  const char* one_of(const char* a, const char* b) const {
    if (has(a) && has(b)) schema_error(path_, std::string("give only one of ") + a + ", " + b);
    if (has(a)) return a;
    if (has(b)) return b;
    schema_error(path_, std::string("one of ") + a + ", " + b + " is required");
  }

  static double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) schema_error(where, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) schema_error(where, "expected a finite number");
    return x;
  }

 private:
  const json& node_;
  std::string path_;
};

// A number, or [numerator, denominator] for ratios that should be kept exact.
double ratio_value(const json& v, const std::string& where) {
  if (v.is_array()) {
    if (v.size() != 2) schema_error(where, "expected [numerator, denominator]");
    const double num = ObjectReader::as_number(v[0], where + "[0]");
    const double den = ObjectReader::as_number(v[1], where + "[1]");
    if (den == 0.0) schema_error(where, "zero denominator");
    return num / den;
  }
  return ObjectReader::as_number(v, where);
}

void positive(double x, const std::string& where) {
  if (!(x > 0.0)) schema_error(where, "must be positive");
}

kaon::KaonParams read_kaon(const json& root, bool need_rabi) {
  if (!root.contains("kaon")) schema_error("kaon", "required key missing");
  const ObjectReader r(root.at("kaon"), "kaon",
                       {"tau1", "tau2", "tau2_over_tau1", "delta_m", "tau1_delta_m", "mass",
                        "omega_x", "omega_x_tau1"});
  kaon::KaonParams k;
  k.tau1 = r.number_or("tau1", 1.0);
  positive(k.tau1, r.child("tau1"));

  const char* tau2_key = r.one_of("tau2", "tau2_over_tau1");
  const double tau2 = ratio_value(r.at(tau2_key), r.child(tau2_key));
  k.tau2 = std::string(tau2_key) == "tau2" ? tau2 : tau2 * k.tau1;
  positive(k.tau2, r.child(tau2_key));

  const char* dm_key = r.one_of("delta_m", "tau1_delta_m");
  const double dm = ratio_value(r.at(dm_key), r.child(dm_key));
  k.delta_m = std::string(dm_key) == "delta_m" ? dm : dm / k.tau1;

  k.mass = r.number_or("mass", 0.0);
  if (r.has("omega_x") || r.has("omega_x_tau1")) {
    const char* key = r.one_of("omega_x", "omega_x_tau1");
    const double om = r.number(key);
    k.omega_x = std::string(key) == "omega_x" ? om : om / k.tau1;
  } else if (need_rabi) {
    schema_error("kaon.omega_x", "required key missing");
  }
  return k;
}

dynamics::TwoQubitParams read_two_qubit(const json& root) {
  if (!root.contains("two_qubit")) schema_error("two_qubit", "required key missing");
  const ObjectReader r(root.at("two_qubit"), "two_qubit",
                       {"tau01", "tau10", "tau10_over_tau01", "detuning", "tau01_detuning", "e10",
                        "g", "g_tau01"});
  dynamics::TwoQubitParams p;
  p.tau01 = r.number_or("tau01", 1.0);
  positive(p.tau01, r.child("tau01"));
  const char* tau_key = r.one_of("tau10", "tau10_over_tau01");
  const double tau10 = ratio_value(r.at(tau_key), r.child(tau_key));
  p.tau10 = std::string(tau_key) == "tau10" ? tau10 : tau10 * p.tau01;
  positive(p.tau10, r.child(tau_key));
  const char* det_key = r.one_of("detuning", "tau01_detuning");
  const double det = r.number(det_key);
  p.e10 = r.number_or("e10", 0.0);
  p.e01 = p.e10 + (std::string(det_key) == "detuning" ? det : det / p.tau01);
  if (r.has("g") || r.has("g_tau01")) {
    const char* g_key = r.one_of("g", "g_tau01");
    const double g = r.number(g_key);
    p.g = std::string(g_key) == "g" ? g : g / p.tau01;
    positive(p.g, r.child(g_key));
  } else {
    p.g = 100.0 / p.tau01;
  }
  return p;
}

Sampling read_sampling(const json& root) {
  Sampling s;
  if (!root.contains("sampling")) return s;
  const ObjectReader r(root.at("sampling"), "sampling", {"t_max_over_tau1", "n_points"});
  s.t_max_over_tau1 = r.number_or("t_max_over_tau1", s.t_max_over_tau1);
  positive(s.t_max_over_tau1, r.child("t_max_over_tau1"));
  s.n_points = r.integer_or("n_points", s.n_points);
  if (s.n_points < 2 || s.n_points > 10'000'000) {
    schema_error(r.child("n_points"), "must lie in [2, 10^7]");
  }
  return s;
}

SpectrumSettings read_spectrum(const json& root) {
  SpectrumSettings s;
  if (root.contains("junction")) {
    const ObjectReader r(root.at("junction"), "junction",
                         {"capacitance", "critical_current", "inductance", "phi_dc", "phi_ac",
                          "omega_rf", "josephson_term"});
    auto& j = s.junction;
    j.capacitance = r.number_or("capacitance", j.capacitance);
    j.critical_current = r.number_or("critical_current", j.critical_current);
    j.inductance = r.number_or("inductance", j.inductance);
    j.phi_dc = r.number_or("phi_dc", j.phi_dc);
    j.phi_ac = r.number_or("phi_ac", j.phi_ac);
    j.omega_rf = r.number_or("omega_rf", j.omega_rf);
    j.josephson_term = r.boolean_or("josephson_term", j.josephson_term);
    positive(j.capacitance, r.child("capacitance"));
    positive(j.critical_current, r.child("critical_current"));
    positive(j.inductance, r.child("inductance"));
  }
  if (root.contains("solver")) {
    const ObjectReader r(root.at("solver"), "solver", {"well_index", "n_points", "n_levels"});
    s.well_index = r.integer_or("well_index", s.well_index);
    s.n_points = r.integer_or("n_points", s.n_points);
    s.n_levels = r.integer_or("n_levels", s.n_levels);
    if (s.well_index < 0) schema_error(r.child("well_index"), "must be >= 0");
    if (s.n_points < 64) schema_error(r.child("n_points"), "must be >= 64");
    if (s.n_levels < 2) schema_error(r.child("n_levels"), "must be >= 2");
  }
  if (root.contains("reference")) {
    const ObjectReader r(root.at("reference"), "reference", {"phi_dc"});
    s.reference_phi_dc = r.number("phi_dc");
  }
  return s;
}

OutputPaths read_output(const json& root) {
  OutputPaths o;
  if (!root.contains("output")) return o;
  const ObjectReader r(root.at("output"), "output", {"csv", "svg", "json"});
  o.csv = r.string_or("csv", "");
  o.svg = r.string_or("svg", "");
  o.json = r.string_or("json", "");
  return o;
}

}  // namespace

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
  if (name == "spectrum") return ScenarioKind::kSpectrum;
  if (name == "mix-analytic") return ScenarioKind::kMixAnalytic;
  if (name == "mix-qubit") return ScenarioKind::kMixQubit;
  if (name == "mix-two-qubit") return ScenarioKind::kMixTwoQubit;
  if (name == "regen") return ScenarioKind::kRegen;
  if (name == "cpv") return ScenarioKind::kCpv;
  return std::nullopt;
}

std::string_view scenario_kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kSpectrum: return "spectrum";
    case ScenarioKind::kMixAnalytic: return "mix-analytic";
    case ScenarioKind::kMixQubit: return "mix-qubit";
    case ScenarioKind::kMixTwoQubit: return "mix-two-qubit";
    case ScenarioKind::kRegen: return "regen";
    case ScenarioKind::kCpv: return "cpv";
  }
  return "unknown";
}

bool is_time_series(ScenarioKind kind) {
  return kind != ScenarioKind::kSpectrum && kind != ScenarioKind::kRegen;
}

std::vector<double> Sampling::grid() const {
  std::vector<double> t(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    t[static_cast<std::size_t>(i)] = t_max_over_tau1 * i / (n_points - 1);
  }
  return t;
}

RunConfig parse_config_text(std::string_view text, std::optional<ScenarioKind> scenario) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema_error("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) schema_error("", "expected an object");

  RunConfig cfg;
  if (root.contains("scenario")) {
    if (!root.at("scenario").is_string()) schema_error("scenario", "expected a string");
    const auto named = parse_scenario_kind(root.at("scenario").get<std::string>());
    if (!named) schema_error("scenario", "unknown scenario");
    if (scenario && *scenario != *named) {
      schema_error("scenario", "does not match the scenario given on the command line");
    }
    scenario = named;
  }
  if (!scenario) schema_error("scenario", "no scenario given");
  cfg.scenario = *scenario;

  switch (cfg.scenario) {
    case ScenarioKind::kSpectrum:
      ObjectReader(root, "", {"scenario", "output", "junction", "solver", "reference"});
      cfg.spectrum = read_spectrum(root);
      break;
    case ScenarioKind::kMixAnalytic:
    case ScenarioKind::kMixQubit:
      ObjectReader(root, "", {"scenario", "output", "sampling", "kaon"});
      cfg.kaon = read_kaon(root, false);
      break;
    case ScenarioKind::kMixTwoQubit:
      ObjectReader(root, "", {"scenario", "output", "sampling", "two_qubit"});
      cfg.two_qubit = read_two_qubit(root);
      break;
    case ScenarioKind::kCpv: {
      ObjectReader(root, "", {"scenario", "output", "sampling", "kaon", "epsilon"});
      cfg.kaon = read_kaon(root, false);
      if (!root.contains("epsilon")) schema_error("epsilon", "required key missing");
      const json& e = root.at("epsilon");
      if (!e.is_array() || e.size() != 2) schema_error("epsilon", "expected [re, im]");
      cfg.epsilon.value = {ObjectReader::as_number(e[0], "epsilon[0]"),
                           ObjectReader::as_number(e[1], "epsilon[1]")};
      break;
    }
    case ScenarioKind::kRegen: {
      ObjectReader(root, "", {"scenario", "output", "kaon", "regeneration"});
      cfg.kaon = read_kaon(root, true);
      if (root.contains("regeneration")) {
        const ObjectReader r(root.at("regeneration"), "regeneration",
                             {"t1_over_tau1", "t2_over_tau1"});
        cfg.regen.t1_over_tau1 = r.number_or("t1_over_tau1", cfg.regen.t1_over_tau1);
        cfg.regen.t2_over_tau1 = r.number_or("t2_over_tau1", cfg.regen.t2_over_tau1);
        positive(cfg.regen.t1_over_tau1, r.child("t1_over_tau1"));
        positive(cfg.regen.t2_over_tau1, r.child("t2_over_tau1"));
      }
      break;
    }
  }
  if (is_time_series(cfg.scenario)) cfg.sampling = read_sampling(root);
  cfg.output = read_output(root);
  return cfg;
}

RunConfig parse_config(const std::filesystem::path& path, std::optional<ScenarioKind> scenario) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw CliError(kExitMissingFile, "config file not found: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kExitMissingFile, "cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), scenario);
}

}  // namespace kaonsim::cli
