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

#ifndef KAONSIM_SCENARIOS_HPP_
#define KAONSIM_SCENARIOS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kaonsim/dynamics.hpp"
#include "kaonsim/kaon.hpp"
#include "kaonsim/parallel.hpp"

namespace kaonsim::scenarios {

using dynamics::TwoQubitParams;
using kaon::CpEpsilon;
using kaon::KaonParams;
using qmath::Complex;
using qmath::StateVec;

struct MixingProbabilities {
  double k0;
  double k0bar;
};

/// Flavor probabilities of a state prepared as K0 and left to decay:
/// [e^{-t/tau1} + e^{-t/tau2} +/- 2 e^{-t/2tau1 - t/2tau2} cos(dm t)] / 4.
MixingProbabilities analytic_mixing(double t, double tau1, double tau2, double delta_m);

/// The same formula tabulated; component 0 is P_K0 and 1 is P_K0bar.
Trajectory analytic_mixing_trajectory(std::span<const double> times, const KaonParams& k,
                                      Exec exec = Exec::kParallel);

/// R_y(-pi/2) U(t) R_y(pi/2) |0> for each t, with U generated by the
/// decay-only RWA Hamiltonian. Requires k.omega_x == 0.
Trajectory single_qubit_sequence(std::span<const double> times, const KaonParams& k,
                                 Exec exec = Exec::kParallel);

/// U_int U_det(t) U_int R_y^1(pi) |00>. Probabilities are over
/// (|00>, |01>, |10>, |11>).
Trajectory two_qubit_sequence(std::span<const double> times, const TwoQubitParams& p,
                              Exec exec = Exec::kParallel);

/// tau01 -> tau1, tau10 -> tau2, E01 - E10 -> delta m; E10 = 0.
TwoQubitParams two_qubit_from_kaon(const KaonParams& k, double g);

struct Regeneration {
  StateVec before;  // after the free flight t1
  StateVec after;   // after the slab t2
  Complex c1;       // <K1|after>, unnormalized
  Complex c2;       // <K2|after>, unnormalized
  std::vector<std::string> warnings;
};

/// K0 flies freely for t1 under the decay-only Hamiltonian, then crosses a
/// slab modeled by the full Hamiltonian (Rabi term on) for t2.
Regeneration regeneration(double t1, double t2, const KaonParams& k);

/// The single-qubit sequence started from K_L = U_L|0> instead of |0>:
/// R_y(-pi/2) U(t) R_y(pi/2) U_L |0>.
Trajectory cpv_sequence(std::span<const double> times, const KaonParams& k, CpEpsilon eps,
                        Exec exec = Exec::kParallel);

enum class Scenario { kMixAnalytic, kMixQubit, kMixTwoQubit, kCpv };

/// "mix-analytic", "mix-qubit", "mix-two-qubit" or "cpv".
Scenario parse_scenario(std::string_view name);
std::string_view scenario_name(Scenario s);

struct SweepPoint {
  KaonParams kaon;
  CpEpsilon epsilon;
  double coupling = 100.0;  // g for the two-qubit scenario
};

/// One trajectory per grid point, in grid order. The parallel path spreads
/// grid points over threads and runs each trajectory serially.
std::vector<Trajectory> sweep(Scenario scenario, std::span<const SweepPoint> grid,
                              std::span<const double> times, Exec exec = Exec::kParallel);

}  // namespace kaonsim::scenarios

#endif  // KAONSIM_SCENARIOS_HPP_
