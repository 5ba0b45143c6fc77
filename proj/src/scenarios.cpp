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

#include "kaonsim/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kaonsim/error.hpp"

namespace kaonsim::scenarios {

using qmath::Operator;

MixingProbabilities analytic_mixing(double t, double tau1, double tau2, double delta_m) {
  if (!(t >= 0.0)) throw Error("analytic_mixing needs t >= 0");
  const double a = std::exp(-t / tau1);
  const double b = std::exp(-t / tau2);
  const double c = 2.0 * std::exp(-(t / (2.0 * tau1) + t / (2.0 * tau2))) * std::cos(delta_m * t);
  return {(a + b + c) / 4.0, (a + b - c) / 4.0};
}

Trajectory analytic_mixing_trajectory(std::span<const double> times, const KaonParams& k,
                                      Exec exec) {
  kaon::check(k);
  Trajectory out = empty_trajectory(times, 2);
  for_each_index(
      static_cast<std::ptrdiff_t>(times.size()),
      [&](std::ptrdiff_t i) {
        const auto row = static_cast<std::size_t>(i);
        const auto p = analytic_mixing(times[row], k.tau1, k.tau2, k.delta_m);
        out.probs[2 * row] = p.k0;
        out.probs[2 * row + 1] = p.k0bar;
        out.norms[row] = std::sqrt(p.k0 + p.k0bar);
      },
      exec);
  return out;
}

Trajectory single_qubit_sequence(std::span<const double> times, const KaonParams& k,
                                 Exec exec) {
  if (k.omega_x != 0.0) throw Error("canonical kaon sequence requires Omega_x = 0");
  const Operator h = kaon::h_strong_weak(k);
  const Operator prepare = qmath::rotation_y(std::numbers::pi / 2.0);
  const Operator readout = qmath::rotation_y(-std::numbers::pi / 2.0);
  const StateVec start = prepare * StateVec::basis(2, 0);
  return tabulate(
      times, 2, [&](double t) { return readout * (qmath::expm(h, t) * start); }, exec);
}

Trajectory two_qubit_sequence(std::span<const double> times, const TwoQubitParams& p,
                              Exec exec) {
  dynamics::check(p);
  const Operator entangler = dynamics::u_int(p.g);
  const Operator h = dynamics::h_det(p);
  const Operator flip_q1 =
      qmath::kron(Operator::identity(2), qmath::rotation_y(std::numbers::pi));
  const StateVec start = entangler * (flip_q1 * StateVec::basis(4, 0));
  return tabulate(
      times, 4, [&](double t) { return entangler * (qmath::expm(h, t) * start); }, exec);
}

TwoQubitParams two_qubit_from_kaon(const KaonParams& k, double g) {
  TwoQubitParams p;
  p.e10 = 0.0;
  p.e01 = k.delta_m;
  p.tau01 = k.tau1;
  p.tau10 = k.tau2;
  p.g = g;
  return p;
}

Regeneration regeneration(double t1, double t2, const KaonParams& k) {
  if (!(t1 >= 0.0) || !(t2 >= 0.0)) throw Error("regeneration times must be non-negative");
  Regeneration r{StateVec::basis(2, 0), StateVec::basis(2, 0), 0.0, 0.0, kaon::warnings(k)};
  if (!(k.tau2 >= 10.0 * t1 && t1 >= 10.0 * k.tau1)) {
    r.warnings.emplace_back("expected tau2 >> t1 >> tau1 (10x separation)");
  }
  if (!(t2 * 10.0 <= t1)) r.warnings.emplace_back("expected t2 << t1");
  if (!(k.omega_x > 0.0)) r.warnings.emplace_back("Omega_x = 0: the slab does nothing");

  const StateVec k0 = kaon::flavor_states().k0;
  r.before = dynamics::propagate_const(kaon::h_strong_weak(k), k0, t1);
  r.after = dynamics::propagate_const(kaon::h_rwa(k), r.before, t2);
  r.c1 = qmath::inner(kaon::k1_state(), r.after);
  r.c2 = qmath::inner(kaon::k2_state(), r.after);
  return r;
}

Trajectory cpv_sequence(std::span<const double> times, const KaonParams& k, CpEpsilon eps,
                        Exec exec) {
  if (k.omega_x != 0.0) throw Error("canonical kaon sequence requires Omega_x = 0");
  const Operator u_long = kaon::cp_violating_rotations(eps).long_lived;
  const Operator h = kaon::h_strong_weak(k);
  const Operator prepare = qmath::rotation_y(std::numbers::pi / 2.0);
  const Operator readout = qmath::rotation_y(-std::numbers::pi / 2.0);
  const StateVec start = prepare * (u_long * StateVec::basis(2, 0));
  return tabulate(
      times, 2, [&](double t) { return readout * (qmath::expm(h, t) * start); }, exec);
}

Scenario parse_scenario(std::string_view name) {
  if (name == "mix-analytic") return Scenario::kMixAnalytic;
  if (name == "mix-qubit") return Scenario::kMixQubit;
  if (name == "mix-two-qubit") return Scenario::kMixTwoQubit;
  if (name == "cpv") return Scenario::kCpv;
  throw Error("unknown scenario '" + std::string(name) + "'");
}

std::string_view scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kMixAnalytic: return "mix-analytic";
    case Scenario::kMixQubit: return "mix-qubit";
    case Scenario::kMixTwoQubit: return "mix-two-qubit";
    case Scenario::kCpv: return "cpv";
  }
  return "unknown";
}

std::vector<Trajectory> sweep(Scenario scenario, std::span<const SweepPoint> grid,
                              std::span<const double> times, Exec exec) {
  if (grid.empty()) throw Error("sweep grid is empty");
  auto run_one = [&](const SweepPoint& pt) -> Trajectory {
    switch (scenario) {
      case Scenario::kMixAnalytic:
        return analytic_mixing_trajectory(times, pt.kaon, Exec::kSerial);
      case Scenario::kMixQubit:
        return single_qubit_sequence(times, pt.kaon, Exec::kSerial);
      case Scenario::kMixTwoQubit:
        return two_qubit_sequence(times, two_qubit_from_kaon(pt.kaon, pt.coupling),
                                  Exec::kSerial);
      case Scenario::kCpv:
        return cpv_sequence(times, pt.kaon, pt.epsilon, Exec::kSerial);
    }
    throw Error("unknown scenario");
  };
  return map_points<Trajectory>(grid, run_one, exec);
}

}  // namespace kaonsim::scenarios
