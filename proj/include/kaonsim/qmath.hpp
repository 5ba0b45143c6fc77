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

#ifndef KAONSIM_QMATH_HPP_
#define KAONSIM_QMATH_HPP_

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace kaonsim::qmath {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Amplitudes of a one-qubit (dim 2) or two-qubit (dim 4) state.
///
/// Component 0 is |0> for one qubit. For two qubits the order is
/// |00>, |01>, |10>, |11> with the left digit belonging to qubit 2.
class StateVec {
 public:
  StateVec(std::initializer_list<Complex> amplitudes);
  explicit StateVec(std::span<const Complex> amplitudes);

  static StateVec basis(int dim, int index);

  int dim() const { return dim_; }
  Complex operator[](int i) const { return amp_[static_cast<std::size_t>(i)]; }
  Complex& operator[](int i) { return amp_[static_cast<std::size_t>(i)]; }
  std::span<const Complex> amplitudes() const {
    return {amp_.data(), static_cast<std::size_t>(dim_)};
  }

  double norm() const;

  friend StateVec operator*(Complex s, const StateVec& v);
  friend StateVec operator+(const StateVec& a, const StateVec& b);
  friend StateVec operator-(const StateVec& a, const StateVec& b);

 private:
  int dim_;
  std::array<Complex, 4> amp_{};
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVec& a, const StateVec& b);

/// Dense dim x dim complex matrix, dim in {2, 4}.
///
/// The unitary flag is set only through `as_unitary()` (which checks
/// ||U^dag U - I||_max < 1e-12) or by constructors that build unitaries
/// in closed form. Products and adjoints of flagged operators stay flagged.
class Operator {
 public:
  Operator(int dim, std::initializer_list<Complex> row_major);

  static Operator zero(int dim);
  static Operator identity(int dim);
  static Operator diagonal(std::span<const Complex> entries);

  int dim() const { return dim_; }
  bool is_unitary() const { return unitary_; }

  Complex operator()(int row, int col) const { return m_[index(row, col)]; }
  /// Clears the unitary flag.
  void set(int row, int col, Complex value) {
    unitary_ = false;
    m_[index(row, col)] = value;
  }

  Operator adjoint() const;
  Operator as_unitary(double tolerance = 1e-12) const;

  double max_abs() const;
  double one_norm() const;
  bool all_finite() const;

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, const Operator& a);
  friend StateVec operator*(const Operator& a, const StateVec& v);

 private:
  explicit Operator(int dim);
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row * dim_ + col);
  }

  int dim_;
  bool unitary_ = false;
  std::array<Complex, 16> m_{};
};

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Operator& a, const Operator& b);
double max_abs_diff(const StateVec& a, const StateVec& b);

Operator commutator(const Operator& a, const Operator& b);

enum class Axis { kX, kY, kZ };

/// Pauli matrix with sigma_z|0> = +|0> and sigma_y|0> = i|1>.
Operator pauli(Axis axis);

/// exp(-i theta (n.sigma)/2) with n = axis / |axis|.
Operator rotation(const std::array<double, 3>& axis, double theta);
Operator rotation_x(double theta);
Operator rotation_y(double theta);
Operator rotation_z(double theta);

/// exp(-i H t).
///
/// Two-level generators use the closed-form spectral formula, switching to a
/// power series in the squared half-gap when the eigenvalues of H are closer
/// than 1e-8 ||H|| (the defective or nearly defective case). Four-level
/// generators go through `expm_series`.
Operator expm(const Operator& h, double t);

/// exp(-i H t) by scaling and squaring of a truncated Taylor series.
Operator expm_series(const Operator& h, double t);

/// A (x) B. The left factor acts on qubit 2 and the right factor on qubit 1.
Operator kron(const Operator& a, const Operator& b);

/// |amplitude|^2 per component. Never renormalized.
std::vector<double> probabilities(const StateVec& psi);

}  // namespace kaonsim::qmath

#endif  // KAONSIM_QMATH_HPP_
