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

#include "kaonsim/kaon.hpp"

#include <cmath>
#include <numbers>

#include "kaonsim/error.hpp"

namespace kaonsim::kaon {

void check(const KaonParams& k) {
  if (!(k.tau1 > 0.0) || !(k.tau2 > 0.0)) throw Error("kaon lifetimes must be positive");
  if (!std::isfinite(k.mass) || !std::isfinite(k.delta_m) || !std::isfinite(k.omega_x)) {
    throw Error("kaon parameters must be finite");
  }
}

std::vector<std::string> warnings(const KaonParams& k) {
  std::vector<std::string> w;
  if (k.tau2 <= k.tau1) w.emplace_back("tau2 <= tau1: the long-lived mode decays faster");
  return w;
}

Operator h_strong_weak(const KaonParams& k) {
  check(k);
  // tau = inf gives a zero decay rate.
  const Complex d[2] = {Complex(k.m2(), -0.5 / k.tau2), Complex(k.m1(), -0.5 / k.tau1)};
  return Operator::diagonal(d);
}

Operator h_rwa(const KaonParams& k) {
  return h_strong_weak(k) + Complex(0.5 * k.omega_x) * qmath::pauli(qmath::Axis::kX);
}

StateVec k2_state() { return StateVec::basis(2, 0); }
StateVec k1_state() { return StateVec::basis(2, 1); }

FlavorStates flavor_states() {
  const double r = 1.0 / std::numbers::sqrt2;
  return FlavorStates{r * (k1_state() + k2_state()), r * (k1_state() - k2_state())};
}

Operator cp_operator() { return Complex(0.0, -1.0) * qmath::pauli(qmath::Axis::kZ); }

CpStates cp_violating_states(CpEpsilon eps) {
  const Complex e = eps.value;
  const double scale = 1.0 / std::sqrt(1.0 + std::norm(e));
  return CpStates{StateVec{scale, scale * e}, StateVec{scale * e, scale}};
}

CpRotations cp_violating_rotations(CpEpsilon eps) {
  const double modulus = std::abs(eps.value);
  if (!(modulus < 1.0)) throw Error("CP rotation construction requires |eps| < 1");
  if (modulus > 0.0 && std::abs(std::arg(eps.value) - std::numbers::pi / 4.0) > 1e-9) {
    throw Error("rotation construction valid only for eps proportional to (1+i)");
  }
  const double theta = 2.0 * std::atan(modulus);
  // exp(+i theta n.sigma/2) is the standard rotation by -theta.
  return CpRotations{qmath::rotation({1.0, -1.0, 0.0}, -theta),
                     qmath::rotation({1.0, 1.0, 0.0}, -theta)};
}

}  // namespace kaonsim::kaon
