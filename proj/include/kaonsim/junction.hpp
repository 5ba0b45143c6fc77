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

#ifndef KAONSIM_JUNCTION_HPP_
#define KAONSIM_JUNCTION_HPP_

#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace kaonsim::junction {

namespace constants {
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kPlanck = 6.62607015e-34;             // J s
inline constexpr double kHbar = kPlanck / (2.0 * std::numbers::pi);
inline constexpr double kFluxQuantum = kPlanck / (2.0 * kElementaryCharge);  // Wb
}  // namespace constants

/// Flux-biased junction loop. SI units; fluxes in units of the flux quantum.
struct JunctionParams {
  double capacitance = 0.0;       // F
  double critical_current = 0.0;  // A
  double inductance = 0.0;        // H
  double phi_dc = 0.0;
  double phi_ac = 0.0;
  double omega_rf = 0.0;  // rad/s
  // When false the -E_J cos(delta) term is dropped, leaving the bare parabola.
  bool josephson_term = true;
};

/// Throws kaonsim::Error on non-positive C, I0, L or |phi_ac| >= 0.1 |phi_dc|.
void check(const JunctionParams& p);

/// Soft violations (|phi_ac/phi_dc| > 0.01).
std::vector<std::string> warnings(const JunctionParams& p);

/// 0.5 pF, 0.5 uA, 2880 pH biased at phi_dc = 0.835. The left-most well then
/// holds six metastable levels with a 6.62 GHz splitting.
JunctionParams default_params();

struct Energies {
  double charging;   // E_c = (2e)^2 / 2C, J
  double josephson;  // E_J = (hbar/2e) I0, J
  double beta;       // 2 pi I0 L / Phi_0
};

Energies derived_energies(const JunctionParams& p);

/// U(delta) = -E_J cos(delta) + (E_J / 2 beta)(delta - 2 pi phi_dc)^2, in J.
double potential(const JunctionParams& p, double delta);
double potential_slope(const JunctionParams& p, double delta);
double potential_curvature(const JunctionParams& p, double delta);

struct Extremum {
  double delta;   // rad
  double energy;  // J
};

struct WellMinima {
  std::vector<Extremum> minima;       // ascending in delta
  std::vector<double> skipped_seeds;  // seeds whose Newton polish failed
};

/// All local minima of U in [2 pi phi_dc - beta - pi, 2 pi phi_dc + beta + pi].
WellMinima find_well_minima(const JunctionParams& p);

/// Local maxima (barrier tops) in the same window, ascending in delta.
std::vector<Extremum> find_barrier_maxima(const JunctionParams& p);

/// Uniform grid including both end points; the end points carry the
/// Dirichlet walls.
struct Grid {
  double delta_min = 0.0;
  double delta_max = 0.0;
  int n_points = 0;

  double spacing() const { return (delta_max - delta_min) / (n_points - 1); }
  double point(int i) const { return delta_min + i * spacing(); }
};

/// Window from the well's adjacent barrier tops. A side with no barrier is
/// extended to where U rises twice the well depth above the minimum; a well
/// with no barrier at all gets +/-5 harmonic lengths.
Grid default_grid(const JunctionParams& p, int well_index, int n_points);

/// Square matrix indexed by level.
template <typename T>
struct LevelMatrix {
  int size = 0;
  std::vector<T> data;

  LevelMatrix() = default;
  explicit LevelMatrix(int n) : size(n), data(static_cast<std::size_t>(n * n)) {}
  T& operator()(int m, int n) { return data[static_cast<std::size_t>(m * size + n)]; }
  const T& operator()(int m, int n) const {
    return data[static_cast<std::size_t>(m * size + n)];
  }
};

struct WellSpectrum {
  Grid grid;
  double well_minimum = 0.0;             // delta*, rad
  double well_bottom = 0.0;              // U(delta*), J
  double barrier_top = 0.0;              // lower adjacent barrier, J (inf if none)
  std::vector<double> energies;          // J, ascending
  std::vector<std::vector<double>> wavefunctions;  // on every grid point, rad^-1/2
  LevelMatrix<double> delta_elements;    // <m|delta|n>, rad
  LevelMatrix<std::complex<double>> p_direct;    // <m|-i hbar d/d delta|n>, J s
  LevelMatrix<std::complex<double>> p_identity;  // (i hbar / 2E_c)(E_m - E_n) delta_mn

  int levels() const { return static_cast<int>(energies.size()); }
};

/// Lowest `n_levels` states of H_dc in one well: 3-point finite differences
/// on `grid` with Dirichlet walls. Wavefunctions are trapezoid-normalized
/// and signed so that sum psi_n (delta - delta*)^n > 0 (psi_0 > 0 at the
/// minimum).
WellSpectrum solve_well(const JunctionParams& p, int well_index, const Grid& grid,
                        int n_levels);

/// max_{m,n} |p_direct - p_identity| / max(|p_direct|, hbar).
double momentum_identity_residual(const WellSpectrum& s, double charging_energy);

struct QubitParams {
  double splitting;       // Delta epsilon = E_1 - E_0, J
  double rabi_frequency;  // Omega_x, rad/s
  double const_term;      // (E_0 + E_1)/2 - U(delta*), J; global phase only
  double delta_00;
  double delta_11;
  double delta_01;
};

/// Projects H_dc plus the ac drive onto the two lowest levels.
QubitParams reduce_to_qubit(const JunctionParams& p, const WellSpectrum& s);

/// Delta m = (Delta eps_ref - Delta eps) / hbar, in rad/s.
double detuning(double splitting, double reference_splitting);

}  // namespace kaonsim::junction

#endif  // KAONSIM_JUNCTION_HPP_
