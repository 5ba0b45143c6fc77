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


// Hand-rolled generators and small helpers shared by the test binaries.

#ifndef KAONSIM_TESTS_SUPPORT_HPP_
#define KAONSIM_TESTS_SUPPORT_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "kaonsim/qmath.hpp"
#include "oracles/oracles.hpp"

namespace testing_support {

using kaonsim::qmath::Complex;
using kaonsim::qmath::Operator;
using kaonsim::qmath::StateVec;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline double log_uniform(std::mt19937_64& g, double lo, double hi) {
  return std::exp(uniform(g, std::log(lo), std::log(hi)));
}

inline double normal_real(std::mt19937_64& g) { return std::normal_distribution<double>()(g); }

inline Complex complex_normal(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  return {n(g), n(g)};
}

inline StateVec random_state(std::mt19937_64& g, int dim) {
  StateVec v = StateVec::basis(dim, 0);
  for (int i = 0; i < dim; ++i) v[i] = complex_normal(g);
  return (1.0 / v.norm()) * v;
}

inline Operator random_hermitian(std::mt19937_64& g, int dim) {
  Operator h = Operator::zero(dim);
  for (int r = 0; r < dim; ++r) {
    h.set(r, r, normal_real(g));
    for (int c = r + 1; c < dim; ++c) {
      const Complex z = complex_normal(g);
      h.set(r, c, z);
      h.set(c, r, std::conj(z));
    }
  }
  return h;
}

// Hermitian part plus -i/2 diag(gamma) with gamma >= 0: a decaying generator.
inline Operator random_decaying(std::mt19937_64& g, int dim, double max_rate) {
  Operator h = random_hermitian(g, dim);
  for (int i = 0; i < dim; ++i) h.set(i, i, h(i, i) - Complex(0.0, 0.5 * uniform(g, 0.0, max_rate)));
  return h;
}

inline Operator random_general(std::mt19937_64& g, int dim) {
  Operator h = Operator::zero(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) h.set(r, c, complex_normal(g));
  return h;
}

inline std::array<double, 3> random_axis(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  return {n(g), n(g), n(g)};
}

inline std::vector<std::complex<double>> entries(const Operator& a) {
  std::vector<std::complex<double>> out;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out.push_back(a(r, c));
  return out;
}

inline double max_abs_diff(const Operator& a, const oracle::Mat& b) {
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      const auto ref = b[static_cast<std::size_t>(r * a.dim() + c)];
      const Complex bc(static_cast<double>(ref.real()), static_cast<double>(ref.imag()));
      m = std::max(m, std::abs(a(r, c) - bc));
    }
  return m;
}

}  // namespace testing_support

#endif  // KAONSIM_TESTS_SUPPORT_HPP_
