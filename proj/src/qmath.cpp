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

#include "kaonsim/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kaonsim/error.hpp"

namespace kaonsim::qmath {
namespace {

void require_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw Error("unsupported dimension " + std::to_string(dim) +
                " (expected 2 or 4)");
  }
}

void require_same_dim(int a, int b) {
  if (a != b) {
    throw Error("dimension mismatch: " + std::to_string(a) + " vs " +
                std::to_string(b));
  }
}

}  // namespace

StateVec::StateVec(std::initializer_list<Complex> amplitudes)
    : StateVec(std::span<const Complex>(amplitudes.begin(), amplitudes.size())) {}

StateVec::StateVec(std::span<const Complex> amplitudes)
    : dim_(static_cast<int>(amplitudes.size())) {
  require_dim(dim_);
  std::copy(amplitudes.begin(), amplitudes.end(), amp_.begin());
}

StateVec StateVec::basis(int dim, int index) {
  require_dim(dim);
  if (index < 0 || index >= dim) {
    throw Error("basis index out of range");
  }
  std::array<Complex, 4> amp{};
  amp[static_cast<std::size_t>(index)] = 1.0;
  return StateVec(std::span<const Complex>(amp.data(), static_cast<std::size_t>(dim)));
}

double StateVec::norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += std::norm(amp_[static_cast<std::size_t>(i)]);
  return std::sqrt(s);
}

StateVec operator*(Complex s, const StateVec& v) {
  StateVec r = v;
  for (int i = 0; i < v.dim_; ++i) r[i] *= s;
  return r;
}

StateVec operator+(const StateVec& a, const StateVec& b) {
  require_same_dim(a.dim_, b.dim_);
  StateVec r = a;
  for (int i = 0; i < a.dim_; ++i) r[i] += b[i];
  return r;
}

StateVec operator-(const StateVec& a, const StateVec& b) {
  require_same_dim(a.dim_, b.dim_);
  StateVec r = a;
  for (int i = 0; i < a.dim_; ++i) r[i] -= b[i];
  return r;
}

Complex inner(const StateVec& a, const StateVec& b) {
  require_same_dim(a.dim(), b.dim());
  Complex s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Operator::Operator(int dim) : dim_(dim) { require_dim(dim); }

Operator::Operator(int dim, std::initializer_list<Complex> row_major)
    : Operator(dim) {
  if (row_major.size() != static_cast<std::size_t>(dim * dim)) {
    throw Error("operator needs dim*dim entries");
  }
  std::copy(row_major.begin(), row_major.end(), m_.begin());
}

Operator Operator::zero(int dim) { return Operator(dim); }

Operator Operator::identity(int dim) {
  Operator r(dim);
  for (int i = 0; i < dim; ++i) r.m_[r.index(i, i)] = 1.0;
  r.unitary_ = true;
  return r;
}

Operator Operator::diagonal(std::span<const Complex> entries) {
  Operator r(static_cast<int>(entries.size()));
  for (int i = 0; i < r.dim_; ++i) r.m_[r.index(i, i)] = entries[static_cast<std::size_t>(i)];
  return r;
}

Operator Operator::adjoint() const {
  Operator r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r.m_[r.index(i, j)] = std::conj(m_[index(j, i)]);
  r.unitary_ = unitary_;
  return r;
}

Operator Operator::as_unitary(double tolerance) const {
  Operator unflagged = *this;
  unflagged.unitary_ = false;
  const double defect = max_abs_diff(unflagged.adjoint() * unflagged, identity(dim_));
  if (!(defect < tolerance)) {
    throw Error("operator is not unitary: ||U^dag U - I||_max = " +
                std::to_string(defect));
  }
  unflagged.unitary_ = true;
  return unflagged;
}

double Operator::max_abs() const {
  double r = 0.0;
  for (int i = 0; i < dim_ * dim_; ++i) r = std::max(r, std::abs(m_[static_cast<std::size_t>(i)]));
  return r;
}

double Operator::one_norm() const {
  double r = 0.0;
  for (int j = 0; j < dim_; ++j) {
    double col = 0.0;
    for (int i = 0; i < dim_; ++i) col += std::abs(m_[index(i, j)]);
    r = std::max(r, col);
  }
  return r;
}

bool Operator::all_finite() const {
  for (int i = 0; i < dim_ * dim_; ++i) {
    const Complex z = m_[static_cast<std::size_t>(i)];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a.dim_, b.dim_);
  Operator r(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const Complex aik = a.m_[a.index(i, k)];
      for (int j = 0; j < a.dim_; ++j) r.m_[r.index(i, j)] += aik * b.m_[b.index(k, j)];
    }
  r.unitary_ = a.unitary_ && b.unitary_;
  return r;
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a.dim_, b.dim_);
  Operator r(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.m_[k] = a.m_[k] + b.m_[k];
  }
  return r;
}

Operator operator-(const Operator& a, const Operator& b) {
  return a + Complex(-1.0) * b;
}

Operator operator*(Complex s, const Operator& a) {
  Operator r(a.dim_);
  for (int i = 0; i < a.dim_ * a.dim_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.m_[k] = s * a.m_[k];
  }
  return r;
}

StateVec operator*(const Operator& a, const StateVec& v) {
  require_same_dim(a.dim_, v.dim());
  std::array<Complex, 4> out{};
  for (int i = 0; i < a.dim_; ++i)
    for (int j = 0; j < a.dim_; ++j) out[static_cast<std::size_t>(i)] += a.m_[a.index(i, j)] * v[j];
  return StateVec(std::span<const Complex>(out.data(), static_cast<std::size_t>(a.dim_)));
}

double max_abs_diff(const Operator& a, const Operator& b) {
  require_same_dim(a.dim(), b.dim());
  double r = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r = std::max(r, std::abs(a(i, j) - b(i, j)));
  return r;
}

double max_abs_diff(const StateVec& a, const StateVec& b) {
  require_same_dim(a.dim(), b.dim());
  double r = 0.0;
  for (int i = 0; i < a.dim(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator pauli(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return Operator(2, {0.0, 1.0, 1.0, 0.0}).as_unitary();
    case Axis::kY:
      return Operator(2, {0.0, -kI, kI, 0.0}).as_unitary();
    case Axis::kZ:
      return Operator(2, {1.0, 0.0, 0.0, -1.0}).as_unitary();
  }
  throw Error("unknown Pauli axis");
}

Operator rotation(const std::array<double, 3>& axis, double theta) {
  const double len = std::hypot(axis[0], axis[1], axis[2]);
  if (!(len > 0.0) || !std::isfinite(len)) throw Error("degenerate axis");
  const double nx = axis[0] / len;
  const double ny = axis[1] / len;
  const double nz = axis[2] / len;
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  // c I - i s (n . sigma)
  Operator r(2, {Complex(c, -s * nz), Complex(-s * ny, -s * nx),
                 Complex(s * ny, -s * nx), Complex(c, s * nz)});
  return r.as_unitary();
}

Operator rotation_x(double theta) { return rotation({1.0, 0.0, 0.0}, theta); }
Operator rotation_y(double theta) { return rotation({0.0, 1.0, 0.0}, theta); }
Operator rotation_z(double theta) { return rotation({0.0, 0.0, 1.0}, theta); }

namespace {

// exp(-i H t) for a 2x2 generator. Writing A = -i H t = a I + B with B
// traceless gives B^2 = s I, so exp(A) = e^a (cosh q I + sinh(q)/q B) with
// q^2 = s. Nearly coincident eigenvalues use the series in s instead.
Operator expm_two_level(const Operator& h, double t) {
  const Complex h_half_trace = 0.5 * (h(0, 0) + h(1, 1));
  const Complex h_b00 = h(0, 0) - h_half_trace;
  const Complex h_gap_half = std::sqrt(h_b00 * h_b00 + h(0, 1) * h(1, 0));

  const Complex minus_it(0.0, -t);
  const Complex a = minus_it * h_half_trace;
  const Complex b00 = minus_it * h_b00;
  const Complex b01 = minus_it * h(0, 1);
  const Complex b10 = minus_it * h(1, 0);
  const Complex s = b00 * b00 + b01 * b10;

  Complex cosh_q;
  Complex sinhc_q;
  if (2.0 * std::abs(h_gap_half) < 1e-8 * h.one_norm() || std::abs(s) < 1e-2) {
    // sum_k s^k/(2k)! and sum_k s^k/(2k+1)!
    Complex term_c = 1.0;
    Complex term_s = 1.0;
    cosh_q = term_c;
    sinhc_q = term_s;
    for (int k = 1; k < 40; ++k) {
      term_c *= s / static_cast<double>((2 * k - 1) * (2 * k));
      term_s *= s / static_cast<double>((2 * k) * (2 * k + 1));
      cosh_q += term_c;
      sinhc_q += term_s;
      if (std::abs(term_c) + std::abs(term_s) < 1e-18 * (std::abs(cosh_q) + std::abs(sinhc_q))) break;
    }
  } else {
    const Complex q = std::sqrt(s);
    if (std::abs(q.real()) < 300.0) {
      cosh_q = std::cosh(q);
      sinhc_q = std::sinh(q) / q;
    } else {
      // Fold e^a in before the hyperbolic functions can overflow.
      const Complex ep = std::exp(a + q);
      const Complex em = std::exp(a - q);
      const Complex c = 0.5 * (ep + em);
      const Complex sc = 0.5 * (ep - em) / q;
      return Operator(2, {c + sc * b00, sc * b01, sc * b10, c - sc * b00});
    }
  }
  const Complex ea = std::exp(a);
  const Complex c = ea * cosh_q;
  const Complex sc = ea * sinhc_q;
  return Operator(2, {c + sc * b00, sc * b01, sc * b10, c - sc * b00});
}

}  // namespace

Operator expm_series(const Operator& h, double t) {
  if (!h.all_finite() || !std::isfinite(t)) throw Error("expm: non-finite input");
  const Operator a = Complex(0.0, -t) * h;
  const double norm = a.one_norm();
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Operator scaled = Complex(std::ldexp(1.0, -squarings)) * a;

  Operator result = Operator::identity(h.dim());
  Operator term = Operator::identity(h.dim());
  for (int k = 1; k <= 30; ++k) {
    term = Complex(1.0 / k) * (term * scaled);
    result = result + term;
    if (term.max_abs() < 1e-18 * result.max_abs()) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Operator expm(const Operator& h, double t) {
  if (!h.all_finite() || !std::isfinite(t)) throw Error("expm: non-finite input");
  if (h.dim() == 2) return expm_two_level(h, t);
  return expm_series(h, t);
}

Operator kron(const Operator& a, const Operator& b) {
  if (a.dim() != 2 || b.dim() != 2) throw Error("kron: both factors must be 2x2");
  Operator r = Operator::zero(4);
  for (int r2 = 0; r2 < 2; ++r2)
    for (int c2 = 0; c2 < 2; ++c2)
      for (int r1 = 0; r1 < 2; ++r1)
        for (int c1 = 0; c1 < 2; ++c1) r.set(2 * r2 + r1, 2 * c2 + c1, a(r2, c2) * b(r1, c1));
  if (a.is_unitary() && b.is_unitary()) return r.as_unitary();
  return r;
}

std::vector<double> probabilities(const StateVec& psi) {
  std::vector<double> p(static_cast<std::size_t>(psi.dim()));
  for (int i = 0; i < psi.dim(); ++i) p[static_cast<std::size_t>(i)] = std::norm(psi[i]);
  return p;
}

}  // namespace kaonsim::qmath
