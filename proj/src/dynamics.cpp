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

#include "kaonsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kaonsim/error.hpp"

namespace kaonsim::dynamics {

using qmath::Complex;

StateVec propagate_const(const Operator& h, const StateVec& psi0, double t) {
  if (h.dim() != psi0.dim()) throw Error("dimension mismatch between H and state");
  if (!(t >= 0.0)) throw Error("propagation time must be non-negative");
  return qmath::expm(h, t) * psi0;
}

Segment free_evolution(const Operator& h, double duration) {
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw Error("free evolution duration must be finite and non-negative");
  }
  return FreeEvolution{h, duration};
}

Segment gate(const Operator& u) {
  if (!u.is_unitary()) throw Error("gate operator must carry the unitary flag");
  return Gate{u};
}

Trajectory run_sequence(std::span<const Segment> segments, const StateVec& psi0,
                        std::span<const double> sample_times, Exec exec) {
  // after[j]: state once segments 0..j have fully run; start[j]: clock at
  // the beginning of segment j.
  std::vector<StateVec> after;
  std::vector<double> start;
  after.reserve(segments.size());
  start.reserve(segments.size());
  StateVec psi = psi0;
  double clock = 0.0;
  for (const Segment& seg : segments) {
    start.push_back(clock);
    if (const auto* f = std::get_if<FreeEvolution>(&seg)) {
      if (f->hamiltonian.dim() != psi0.dim()) throw Error("segment dimension mismatch");
      if (!(f->duration >= 0.0)) throw Error("free evolution duration must be non-negative");
      psi = qmath::expm(f->hamiltonian, f->duration) * psi;
      clock += f->duration;
    } else {
      const auto& g = std::get<Gate>(seg);
      if (g.unitary.dim() != psi0.dim()) throw Error("segment dimension mismatch");
      if (!g.unitary.is_unitary()) throw Error("gate operator must carry the unitary flag");
      psi = g.unitary * psi;
    }
    after.push_back(psi);
  }
  const double total = clock;
  for (double t : sample_times) {
    if (!(t >= 0.0) || t > total * (1.0 + 1e-14)) {
      throw Error("sample time outside the sequence duration");
    }
  }

  auto state_at = [&](double t) -> StateVec {
    for (std::size_t j = 0; j < segments.size(); ++j) {
      const auto* f = std::get_if<FreeEvolution>(&segments[j]);
      if (f && start[j] <= t && t < start[j] + f->duration) {
        const StateVec& before = j == 0 ? psi0 : after[j - 1];
        return qmath::expm(f->hamiltonian, t - start[j]) * before;
      }
    }
    return after.empty() ? psi0 : after.back();
  };
  return tabulate(sample_times, psi0.dim(), state_at, exec);
}

namespace {

struct Rk4Stepper {
  const DrivenQubit& q;

  // -i H(t) psi
  std::array<Complex, 2> rhs(double t, const std::array<Complex, 2>& psi) const {
    const double drive = q.rabi * std::cos(q.drive_frequency * t);
    const Complex h00(-0.5 * q.splitting, -0.5 / q.tau0);
    const Complex h11(0.5 * q.splitting, -0.5 / q.tau1);
    const Complex minus_i(0.0, -1.0);
    return {minus_i * (h00 * psi[0] + drive * psi[1]),
            minus_i * (drive * psi[0] + h11 * psi[1])};
  }

  void step(double t, double h, std::array<Complex, 2>& psi) const {
    auto axpy = [](const std::array<Complex, 2>& y, double a, const std::array<Complex, 2>& k) {
      return std::array<Complex, 2>{y[0] + a * k[0], y[1] + a * k[1]};
    };
    const auto k1 = rhs(t, psi);
    const auto k2 = rhs(t + 0.5 * h, axpy(psi, 0.5 * h, k1));
    const auto k3 = rhs(t + 0.5 * h, axpy(psi, 0.5 * h, k2));
    const auto k4 = rhs(t + h, axpy(psi, h, k3));
    for (int i = 0; i < 2; ++i) {
      const auto u = static_cast<std::size_t>(i);
      psi[u] += h / 6.0 * (k1[u] + 2.0 * k2[u] + 2.0 * k3[u] + k4[u]);
    }
  }
};

long checked_steps(const DrivenQubit& q, const StateVec& psi0, double duration, double dt) {
  if (psi0.dim() != 2) throw Error("driven lab frame needs a single-qubit state");
  if (!(q.tau0 > 0.0) || !(q.tau1 > 0.0)) throw Error("lifetimes must be positive");
  if (!(duration >= 0.0) || !(dt > 0.0)) throw Error("invalid duration or time step");
  const double fastest = std::max(std::abs(q.splitting), std::abs(q.drive_frequency));
  if (fastest > 0.0 && dt > 2.0 * std::numbers::pi / (50.0 * fastest)) {
    throw Error("under-resolved drive");
  }
  return static_cast<long>(std::ceil(duration / dt));
}

}  // namespace

StateVec driven_lab_frame(const DrivenQubit& q, const StateVec& psi0, double duration,
                          double dt) {
  const long steps = checked_steps(q, psi0, duration, dt);
  std::array<Complex, 2> psi{psi0[0], psi0[1]};
  if (steps == 0) return psi0;
  const double h = duration / static_cast<double>(steps);
  const Rk4Stepper stepper{q};
  for (long i = 0; i < steps; ++i) stepper.step(static_cast<double>(i) * h, h, psi);
  return StateVec{psi[0], psi[1]};
}

Trajectory driven_lab_frame_trajectory(const DrivenQubit& q, const StateVec& psi0,
                                       double duration, double dt, int stride) {
  if (stride < 1) throw Error("stride must be positive");
  const long steps = checked_steps(q, psi0, duration, dt);
  const double h = steps == 0 ? 0.0 : duration / static_cast<double>(steps);
  const Rk4Stepper stepper{q};
  std::array<Complex, 2> psi{psi0[0], psi0[1]};

  Trajectory out;
  out.dim = 2;
  auto record = [&](double t) {
    out.times.push_back(t);
    const double p0 = std::norm(psi[0]);
    const double p1 = std::norm(psi[1]);
    out.probs.push_back(p0);
    out.probs.push_back(p1);
    out.norms.push_back(std::sqrt(p0 + p1));
  };
  record(0.0);
  for (long i = 0; i < steps; ++i) {
    stepper.step(static_cast<double>(i) * h, h, psi);
    if ((i + 1) % stride == 0 || i + 1 == steps) record(static_cast<double>(i + 1) * h);
  }
  return out;
}

void check(const TwoQubitParams& p) {
  if (!(p.g > 0.0)) throw Error("coupling g must be positive");
  if (!(p.tau01 > 0.0) || !(p.tau10 > 0.0)) throw Error("two-qubit lifetimes must be positive");
  if (!std::isfinite(p.e01) || !std::isfinite(p.e10) || !std::isfinite(p.g)) {
    throw Error("two-qubit parameters must be finite");
  }
}

std::vector<std::string> warnings(const TwoQubitParams& p) {
  std::vector<std::string> w;
  if (!(p.delta_m() > 0.0)) w.emplace_back("detuning E01 - E10 is not positive");
  if (!(p.tau01 < p.tau10)) w.emplace_back("expected tau01 < tau10");
  return w;
}

Operator h_det(const TwoQubitParams& p) {
  check(p);
  const Complex q2[2] = {0.0, Complex(p.e10, -0.5 / p.tau10)};
  const Complex q1[2] = {0.0, Complex(p.e01, -0.5 / p.tau01)};
  const Operator id = Operator::identity(2);
  return qmath::kron(Operator::diagonal(q2), id) + qmath::kron(id, Operator::diagonal(q1));
}

Operator h_int(double g) {
  if (!(g > 0.0)) throw Error("coupling g must be positive");
  using qmath::Axis;
  const Operator sx = qmath::pauli(Axis::kX);
  const Operator sy = qmath::pauli(Axis::kY);
  return Complex(0.5 * g) * (qmath::kron(sx, sx) + qmath::kron(sy, sy));
}

Operator u_int(double g) {
  return qmath::expm(h_int(g), std::numbers::pi / (4.0 * g)).as_unitary();
}

Operator u_int_physical(const TwoQubitParams& p) {
  return qmath::expm(h_det(p) + h_int(p.g), std::numbers::pi / (4.0 * p.g));
}

}  // namespace kaonsim::dynamics
