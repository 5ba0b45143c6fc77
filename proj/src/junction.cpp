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

#include "kaonsim/junction.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "kaonsim/error.hpp"

namespace kaonsim::junction {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxNewtonIterations = 100;

// U'(delta) / E_J and U''(delta) / E_J.
double reduced_slope(const JunctionParams& p, double beta, double delta) {
  const double parabola = (delta - 2.0 * kPi * p.phi_dc) / beta;
  return p.josephson_term ? std::sin(delta) + parabola : parabola;
}

double reduced_curvature(const JunctionParams& p, double beta, double delta) {
  return p.josephson_term ? std::cos(delta) + 1.0 / beta : 1.0 / beta;
}

// Safeguarded Newton on U' inside [lo, hi] where U' changes sign.
std::optional<double> polish_root(const JunctionParams& p, double beta, double lo,
                                  double hi) {
  double f_lo = reduced_slope(p, beta, lo);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    const double f = reduced_slope(p, beta, x);
    if (std::abs(f) < 1e-14) return x;
    if ((f < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = f;
    } else {
      hi = x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      return x;
    }
    const double df = reduced_curvature(p, beta, x);
    double next = x - f / df;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    x = next;
  }
  return std::nullopt;
}

struct ExtremaScan {
  std::vector<Extremum> minima;
  std::vector<Extremum> maxima;
  std::vector<double> skipped;
};

ExtremaScan scan_extrema(const JunctionParams& p) {
  check(p);
  const double beta = derived_energies(p).beta;
  const double centre = 2.0 * kPi * p.phi_dc;
  const double lo = centre - beta - kPi;
  const double hi = centre + beta + kPi;
  const int samples = 4096 + static_cast<int>(std::ceil((hi - lo) * 256.0));
  const double step = (hi - lo) / samples;

  ExtremaScan out;
  double x0 = lo;
  double f0 = reduced_slope(p, beta, x0);
  for (int i = 1; i <= samples; ++i) {
    const double x1 = lo + i * step;
    const double f1 = reduced_slope(p, beta, x1);
    if ((f0 < 0.0 && f1 >= 0.0) || (f0 > 0.0 && f1 <= 0.0)) {
      const bool is_minimum = f0 < 0.0;
      if (auto root = polish_root(p, beta, x0, x1)) {
        Extremum e{*root, potential(p, *root)};
        (is_minimum ? out.minima : out.maxima).push_back(e);
      } else {
        out.skipped.push_back(0.5 * (x0 + x1));
      }
    }
    x0 = x1;
    f0 = f1;
  }
  return out;
}

struct Neighbours {
  std::optional<Extremum> left;
  std::optional<Extremum> right;
};

Neighbours adjacent_barriers(const std::vector<Extremum>& maxima, double delta_star) {
  Neighbours n;
  for (const auto& m : maxima) {
    if (m.delta < delta_star) n.left = m;
    if (m.delta > delta_star && !n.right) n.right = m;
  }
  return n;
}

// Outermost point on one side where U first reaches `level`.
double crossing(const JunctionParams& p, double from, double direction, double level) {
  double step = 0.05;
  double inside = from;
  double outside = from + direction * step;
  while (potential(p, outside) < level) {
    inside = outside;
    step *= 2.0;
    outside = from + direction * step;
    if (step > 1e6) throw Error("potential does not rise on one side of the well");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    (potential(p, mid) < level ? inside : outside) = mid;
  }
  return 0.5 * (inside + outside);
}

Extremum select_well(const JunctionParams& p, int well_index) {
  const auto minima = find_well_minima(p).minima;
  if (well_index < 0 || well_index >= static_cast<int>(minima.size())) {
    throw Error("well index " + std::to_string(well_index) + " out of range (" +
                std::to_string(minima.size()) + " wells)");
  }
  return minima[static_cast<std::size_t>(well_index)];
}

}  // namespace

void check(const JunctionParams& p) {
  if (!(p.capacitance > 0.0) || !(p.critical_current > 0.0) || !(p.inductance > 0.0)) {
    throw Error("junction parameters C, I0 and L must be positive");
  }
  if (!std::isfinite(p.phi_dc) || !std::isfinite(p.phi_ac) || !std::isfinite(p.omega_rf)) {
    throw Error("junction bias must be finite");
  }
  if (p.phi_ac != 0.0 && !(std::abs(p.phi_ac) < 0.1 * std::abs(p.phi_dc))) {
    throw Error("ac flux amplitude must satisfy |phi_ac| < 0.1 |phi_dc|");
  }
}

std::vector<std::string> warnings(const JunctionParams& p) {
  std::vector<std::string> w;
  if (p.phi_ac != 0.0 && std::abs(p.phi_ac) > 0.01 * std::abs(p.phi_dc)) {
    w.emplace_back("|phi_ac/phi_dc| exceeds 0.01; small-drive projection is marginal");
  }
  return w;
}

JunctionParams default_params() {
  JunctionParams p;
  p.capacitance = 0.5e-12;
  p.critical_current = 0.5e-6;
  p.inductance = 2880e-12;
  p.phi_dc = 0.835;
  p.phi_ac = 0.0;
  p.omega_rf = 0.0;
  return p;
}

Energies derived_energies(const JunctionParams& p) {
  check(p);
  using namespace constants;
  const double two_e = 2.0 * kElementaryCharge;
  return Energies{two_e * two_e / (2.0 * p.capacitance),
                  kHbar / two_e * p.critical_current,
                  2.0 * kPi * p.critical_current * p.inductance / kFluxQuantum};
}

double potential(const JunctionParams& p, double delta) {
  const Energies e = derived_energies(p);
  const double x = delta - 2.0 * kPi * p.phi_dc;
  const double parabola = e.josephson / (2.0 * e.beta) * x * x;
  return p.josephson_term ? -e.josephson * std::cos(delta) + parabola : parabola;
}

double potential_slope(const JunctionParams& p, double delta) {
  const Energies e = derived_energies(p);
  return e.josephson * reduced_slope(p, e.beta, delta);
}

double potential_curvature(const JunctionParams& p, double delta) {
  const Energies e = derived_energies(p);
  return e.josephson * reduced_curvature(p, e.beta, delta);
}

WellMinima find_well_minima(const JunctionParams& p) {
  auto scan = scan_extrema(p);
  return WellMinima{std::move(scan.minima), std::move(scan.skipped)};
}

std::vector<Extremum> find_barrier_maxima(const JunctionParams& p) {
  return scan_extrema(p).maxima;
}

Grid default_grid(const JunctionParams& p, int well_index, int n_points) {
  const Extremum well = select_well(p, well_index);
  const Neighbours n = adjacent_barriers(find_barrier_maxima(p), well.delta);
  if (!n.left && !n.right) {
    const Energies e = derived_energies(p);
    const double length =
        std::pow(2.0 * e.charging / potential_curvature(p, well.delta), 0.25);
    return Grid{well.delta - 5.0 * length, well.delta + 5.0 * length, n_points};
  }
  const double depth = std::min(n.left ? n.left->energy : INFINITY,
                                n.right ? n.right->energy : INFINITY) -
                       well.energy;
  const double level = well.energy + 2.0 * depth;
  const double lo = n.left ? n.left->delta : crossing(p, well.delta, -1.0, level);
  const double hi = n.right ? n.right->delta : crossing(p, well.delta, +1.0, level);
  return Grid{lo, hi, n_points};
}

WellSpectrum solve_well(const JunctionParams& p, int well_index, const Grid& grid,
                        int n_levels) {
  if (grid.n_points < 64) throw Error("grid needs at least 64 points");
  if (!(grid.delta_max > grid.delta_min)) throw Error("grid window is empty");
  if (n_levels < 1 || n_levels > grid.n_points - 2) throw Error("invalid level count");

  const Energies en = derived_energies(p);
  const Extremum well = select_well(p, well_index);
  if (!(well.delta > grid.delta_min && well.delta < grid.delta_max)) {
    throw Error("window does not contain requested minimum");
  }
  const Neighbours nb = adjacent_barriers(find_barrier_maxima(p), well.delta);
  const double barrier = std::min(nb.left ? nb.left->energy : INFINITY,
                                  nb.right ? nb.right->energy : INFINITY);

  // (H - U*) / E_c = -d^2/d delta^2 + (U - U*) / E_c on the interior points.
  const int n = grid.n_points - 2;
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> off(static_cast<std::size_t>(n), -inv_h2);
  for (int i = 0; i < n; ++i) {
    diag[static_cast<std::size_t>(i)] =
        2.0 * inv_h2 + (potential(p, grid.point(i + 1)) - well.energy) / en.charging;
  }

  lapack_int found = 0;
  std::vector<double> values(static_cast<std::size_t>(n));
  std::vector<double> vectors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n_levels));
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n_levels));
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), off.data(), 0.0, 0.0, 1, n_levels,
      LAPACKE_dlamch('S'), &found, values.data(), vectors.data(), n, support.data());
  if (info != 0 || found != n_levels) {
    throw Error("tridiagonal eigensolver failed (info " + std::to_string(info) + ")");
  }

  WellSpectrum s;
  s.grid = grid;
  s.well_minimum = well.delta;
  s.well_bottom = well.energy;
  s.barrier_top = barrier;
  const double inv_sqrt_h = 1.0 / std::sqrt(h);
  for (int k = 0; k < n_levels; ++k) {
    const double energy = values[static_cast<std::size_t>(k)] * en.charging + well.energy;
    if (energy >= barrier) throw Error("states not metastable in window");
    s.energies.push_back(energy);

    std::vector<double> psi(static_cast<std::size_t>(grid.n_points), 0.0);
    double moment = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v =
          vectors[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] *
          inv_sqrt_h;
      psi[static_cast<std::size_t>(i + 1)] = v;
      moment += v * std::pow(grid.point(i + 1) - well.delta, k);
    }
    if (moment < 0.0) {
      for (double& v : psi) v = -v;
    }
    s.wavefunctions.push_back(std::move(psi));
  }

  using constants::kHbar;
  s.delta_elements = LevelMatrix<double>(n_levels);
  s.p_direct = LevelMatrix<std::complex<double>>(n_levels);
  s.p_identity = LevelMatrix<std::complex<double>>(n_levels);
  for (int m = 0; m < n_levels; ++m) {
    const auto& pm = s.wavefunctions[static_cast<std::size_t>(m)];
    for (int k = 0; k < n_levels; ++k) {
      const auto& pk = s.wavefunctions[static_cast<std::size_t>(k)];
      double position = 0.0;
      double derivative = 0.0;
      for (int i = 1; i + 1 < grid.n_points; ++i) {
        const auto u = static_cast<std::size_t>(i);
        position += pm[u] * grid.point(i) * pk[u];
        derivative += pm[u] * (pk[u + 1] - pk[u - 1]);
      }
      s.delta_elements(m, k) = h * position;
      // h * sum psi_m (psi_k[i+1] - psi_k[i-1]) / 2h
      s.p_direct(m, k) = std::complex<double>(0.0, -kHbar * 0.5 * derivative);
      s.p_identity(m, k) = std::complex<double>(
          0.0, kHbar * (values[static_cast<std::size_t>(m)] - values[static_cast<std::size_t>(k)]) * 0.5);
    }
  }
  for (int m = 0; m < n_levels; ++m)
    for (int k = 0; k < n_levels; ++k) s.p_identity(m, k) *= s.delta_elements(m, k);
  return s;
}

double momentum_identity_residual(const WellSpectrum& s, double charging_energy) {
  using constants::kHbar;
  double worst = 0.0;
  for (int m = 0; m < s.levels(); ++m) {
    for (int k = 0; k < s.levels(); ++k) {
      const std::complex<double> predicted(
          0.0, kHbar / (2.0 * charging_energy) *
                   (s.energies[static_cast<std::size_t>(m)] - s.energies[static_cast<std::size_t>(k)]) *
                   s.delta_elements(m, k));
      const double scale = std::max(std::abs(s.p_direct(m, k)), kHbar);
      worst = std::max(worst, std::abs(s.p_direct(m, k) - predicted) / scale);
    }
  }
  return worst;
}

QubitParams reduce_to_qubit(const JunctionParams& p, const WellSpectrum& s) {
  if (s.levels() < 2) throw Error("fewer than 2 bound levels");
  const Energies e = derived_energies(p);
  QubitParams q{};
  q.splitting = s.energies[1] - s.energies[0];
  q.delta_00 = s.delta_elements(0, 0);
  q.delta_11 = s.delta_elements(1, 1);
  q.delta_01 = s.delta_elements(0, 1);
  q.rabi_frequency =
      2.0 * kPi * e.josephson * p.phi_ac / e.beta * std::abs(q.delta_01) / constants::kHbar;
  q.const_term = 0.5 * (s.energies[0] + s.energies[1]) - s.well_bottom;
  if (!(q.splitting > 0.0)) throw Error("non-positive level splitting");
  if (!(constants::kHbar * std::abs(q.rabi_frequency) < 0.1 * q.splitting)) {
    throw Error("drive too strong: hbar Omega_x must stay below 0.1 Delta epsilon");
  }
  return q;
}

double detuning(double splitting, double reference_splitting) {
  return (reference_splitting - splitting) / constants::kHbar;
}

}  // namespace kaonsim::junction
