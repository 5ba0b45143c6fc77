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

#ifndef KAONSIM_KAON_HPP_
#define KAONSIM_KAON_HPP_

#include <string>
#include <vector>

#include "kaonsim/qmath.hpp"

namespace kaonsim::kaon {

using qmath::Complex;
using qmath::Operator;
using qmath::StateVec;

/// Rotating-frame parameters in natural units (hbar = c = 1): masses and
/// Rabi frequency in rad per time unit, lifetimes in the same time unit.
struct KaonParams {
  double mass = 0.0;
  double delta_m = 0.0;  // m2 - m1
  double tau1 = 1.0;     // short-lived |K1> == |1>
  double tau2 = 1.0;     // long-lived  |K2> == |0>
  double omega_x = 0.0;

  double m1() const { return mass - 0.5 * delta_m; }
  double m2() const { return mass + 0.5 * delta_m; }
};

/// Throws on non-positive or non-finite lifetimes.
void check(const KaonParams& k);
std::vector<std::string> warnings(const KaonParams& k);

/// diag(m2 - i/2tau2, m1 - i/2tau1) in the basis (|K2>, |K1>) = (|0>, |1>).
Operator h_strong_weak(const KaonParams& k);

/// h_strong_weak(k) + (Omega_x / 2) sigma_x.
Operator h_rwa(const KaonParams& k);

StateVec k2_state();  // |0>
StateVec k1_state();  // |1>

struct FlavorStates {
  StateVec k0;     // (|K1> + |K2>)/sqrt2
  StateVec k0bar;  // (|K1> - |K2>)/sqrt2
};

FlavorStates flavor_states();

/// -i sigma_z == R_z(pi).
Operator cp_operator();

struct CpEpsilon {
  Complex value{0.0, 0.0};
};

struct CpStates {
  StateVec long_lived;   // (|K2> + eps|K1>)/sqrt(1+|eps|^2)
  StateVec short_lived;  // (eps|K2> + |K1>)/sqrt(1+|eps|^2)
};

CpStates cp_violating_states(CpEpsilon eps);

struct CpRotations {
  Operator long_lived;   // exp(+i theta (sx - sy)/(2 sqrt2)); maps |0> to K_L
  Operator short_lived;  // exp(+i theta (sx + sy)/(2 sqrt2)); maps |1> to K_S
};

/// theta = 2 arctan|eps|. Only eps on the (1+i) ray (arg eps = pi/4) is
/// accepted, since the rotation axes are fixed at (x -/+ y)/sqrt2.
CpRotations cp_violating_rotations(CpEpsilon eps);

}  // namespace kaonsim::kaon

#endif  // KAONSIM_KAON_HPP_
