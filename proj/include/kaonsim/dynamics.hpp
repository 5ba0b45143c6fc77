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

#ifndef KAONSIM_DYNAMICS_HPP_
#define KAONSIM_DYNAMICS_HPP_

#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kaonsim/parallel.hpp"
#include "kaonsim/qmath.hpp"

namespace kaonsim::dynamics {

using qmath::Operator;
using qmath::StateVec;

/// exp(-i H t) psi0, without renormalization.
StateVec propagate_const(const Operator& h, const StateVec& psi0, double t);

struct FreeEvolution {
  Operator hamiltonian;
  double duration;
};

/// Instantaneous ideal gate; the operator must carry the unitary flag.
struct Gate {
  Operator unitary;
};

using Segment = std::variant<FreeEvolution, Gate>;

/// Validating constructors.
Segment free_evolution(const Operator& h, double duration);
Segment gate(const Operator& u);

/// Runs the segments in order on the clock of the free evolutions. A sample
/// at time t sees every gate positioned at or before t.
Trajectory run_sequence(std::span<const Segment> segments, const StateVec& psi0,
                        std::span<const double> sample_times, Exec exec = Exec::kParallel);

/// Lab-frame driven qubit, all rates in rad/s:
/// H(t) = -(splitting/2) sz + rabi cos(drive t) sx - (i/2) diag(1/tau0, 1/tau1).
struct DrivenQubit {
  double splitting = 0.0;
  double rabi = 0.0;
  double drive_frequency = 0.0;
  double tau0 = std::numeric_limits<double>::infinity();
  double tau1 = std::numeric_limits<double>::infinity();
};

/// Fixed-step classical RK4 up to `duration`. The step is shrunk so that it
/// divides `duration` evenly. Throws "under-resolved drive" if
/// dt > 2 pi / (50 max(splitting, drive_frequency)).
StateVec driven_lab_frame(const DrivenQubit& q, const StateVec& psi0, double duration,
                          double dt);

/// As above, recording the state every `stride` steps (and at t = 0).
Trajectory driven_lab_frame_trajectory(const DrivenQubit& q, const StateVec& psi0,
                                       double duration, double dt, int stride);

/// Two detuned qubits, energies in rad/s.
struct TwoQubitParams {
  double e01 = 0.0;
  double e10 = 0.0;
  double tau01 = 1.0;
  double tau10 = 1.0;
  double g = 1.0;

  double delta_m() const { return e01 - e10; }
};

void check(const TwoQubitParams& p);
std::vector<std::string> warnings(const TwoQubitParams& p);

/// diag(E10 - i/2tau10, 0) on qubit 2 plus diag(E01 - i/2tau01, 0) on qubit 1.
Operator h_det(const TwoQubitParams& p);

/// (g/2)(sx (x) sx + sy (x) sy).
Operator h_int(double g);

/// exp(-i h_int(g) pi/4g), decay-free.
Operator u_int(double g);

/// exp(-i (h_det + h_int) pi/4g); the entangler with decay and detuning
/// left on, for sensitivity studies.
Operator u_int_physical(const TwoQubitParams& p);

}  // namespace kaonsim::dynamics

#endif  // KAONSIM_DYNAMICS_HPP_
