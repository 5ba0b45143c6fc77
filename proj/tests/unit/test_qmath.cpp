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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kaonsim/error.hpp"
#include "kaonsim/qmath.hpp"
#include "support.hpp"

namespace {

using namespace kaonsim::qmath;
using kaonsim::Error;
namespace ts = testing_support;

constexpr double kPi = std::numbers::pi;

TEST(StateVec, BasisAndNorm) {
  const StateVec v = StateVec::basis(4, 2);
  EXPECT_EQ(v.dim(), 4);
  EXPECT_EQ(v[2], Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(v.norm(), 1.0);
  EXPECT_THROW(StateVec::basis(2, 2), Error);
  EXPECT_THROW(StateVec::basis(3, 0), Error);
}

TEST(StateVec, InnerIsConjugateLinearInFirstSlot) {
  const StateVec a{Complex(0.0, 1.0), 0.0};
  const StateVec b{1.0, 0.0};
  EXPECT_EQ(inner(a, b), Complex(0.0, -1.0));
  EXPECT_THROW(inner(a, StateVec::basis(4, 0)), Error);
}

TEST(Operator, PauliAlgebra) {
  const Operator x = pauli(Axis::kX), y = pauli(Axis::kY), z = pauli(Axis::kZ);
  const Operator id = Operator::identity(2);
  EXPECT_LT(max_abs_diff(x * x, id), 1e-15);
  EXPECT_LT(max_abs_diff(y * y, id), 1e-15);
  EXPECT_LT(max_abs_diff(z * z, id), 1e-15);
  EXPECT_LT(max_abs_diff(commutator(x, y), Complex(0.0, 2.0) * z), 1e-15);
  // sigma_z |0> = +|0>
  EXPECT_LT(max_abs_diff(z * StateVec::basis(2, 0), StateVec::basis(2, 0)), 1e-15);
}

TEST(Operator, UnitaryFlag) {
  EXPECT_TRUE(pauli(Axis::kX).is_unitary());
  EXPECT_TRUE(rotation_y(0.3).is_unitary());
  Operator m = Operator::identity(2);
  EXPECT_TRUE(m.is_unitary());
  m.set(0, 1, 0.5);
  EXPECT_FALSE(m.is_unitary());
  EXPECT_THROW(m.as_unitary(), Error);
  EXPECT_TRUE((rotation_x(0.1) * rotation_z(0.2)).is_unitary());
  EXPECT_FALSE((rotation_x(0.1) + rotation_z(0.2)).is_unitary());
}

TEST(Operator, RejectsBadShapes) {
  EXPECT_THROW(Operator::zero(3), Error);
  EXPECT_THROW(Operator(2, {1.0, 0.0, 0.0}), Error);
  EXPECT_THROW(Operator::identity(2) * Operator::identity(4), Error);
  EXPECT_THROW(kron(Operator::identity(4), Operator::identity(2)), Error);
}

TEST(Rotation, HalfPiAboutYFromZero) {
  const StateVec out = rotation_y(kPi / 2) * StateVec::basis(2, 0);
  const double r = 1.0 / std::numbers::sqrt2;
  EXPECT_LT(max_abs_diff(out, StateVec{r, r}), 1e-15);
}

TEST(Rotation, MatchesExponentialOfGenerator) {
  auto g = ts::rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto n = ts::random_axis(g);
    const double theta = ts::uniform(g, -7.0, 7.0);
    const double len = std::hypot(n[0], n[1], n[2]);
    const Operator gen = (0.5 * n[0] / len) * pauli(Axis::kX) +
                         (0.5 * n[1] / len) * pauli(Axis::kY) +
                         (0.5 * n[2] / len) * pauli(Axis::kZ);
    const auto ref = oracle::taylor_expm(ts::entries(gen), 2, theta);
    EXPECT_LT(ts::max_abs_diff(rotation(n, theta), ref), 1e-13);
  }
}

TEST(Rotation, DegenerateAxisThrows) {
  EXPECT_THROW(rotation({0.0, 0.0, 0.0}, 1.0), Error);
  EXPECT_THROW(rotation({NAN, 0.0, 1.0}, 1.0), Error);
}

TEST(Expm, ZeroTimeIsIdentity) {
  auto g = ts::rng(5);
  const Operator h2 = ts::random_decaying(g, 2, 3.0);
  const Operator h4 = ts::random_decaying(g, 4, 3.0);
  EXPECT_LT(max_abs_diff(expm(h2, 0.0), Operator::identity(2)), 1e-15);
  EXPECT_LT(max_abs_diff(expm(h4, 0.0), Operator::identity(4)), 1e-15);
}

TEST(Expm, TinyTimeStaysFinite) {
  // Closed form has sinh(q)/q; q -> 0 must not produce NaN.
  const Operator h(2, {Complex(1.0, -0.5), 0.3, 0.3, Complex(-1.0, -0.1)});
  for (double t : {1e-300, 1e-20, 1e-9, 1e-4}) {
    const Operator u = expm(h, t);
    ASSERT_TRUE(u.all_finite()) << t;
    EXPECT_LT(ts::max_abs_diff(u, oracle::taylor_expm(ts::entries(h), 2, t)), 1e-15);
  }
}

TEST(Expm, DegenerateSpectrumUsesSeries) {
  // Non-diagonalizable: a Jordan block.
  const Operator h(2, {2.0, 1.0, 0.0, 2.0});
  const double t = 0.7;
  const Operator u = expm(h, t);
  const Complex phase = std::exp(Complex(0.0, -2.0 * t));
  EXPECT_LT(std::abs(u(0, 0) - phase), 1e-14);
  EXPECT_LT(std::abs(u(0, 1) - Complex(0.0, -t) * phase), 1e-14);
  EXPECT_LT(std::abs(u(1, 0)), 1e-15);
}

TEST(Expm, LargeDecayDoesNotOverflow) {
  const Operator h(2, {Complex(0.0, -0.5 / 1000.0), 0.0, 0.0, Complex(0.0, -0.5)});
  const Operator u = expm(h, 2000.0);
  ASSERT_TRUE(u.all_finite());
  EXPECT_NEAR(u(0, 0).real(), std::exp(-1.0), 1e-15);
  EXPECT_EQ(u(1, 1), Complex(0.0, 0.0));
}

TEST(Expm, EigenvaluesFollowCharacteristicPolynomial) {
  auto g = ts::rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Operator h = ts::random_general(g, 2);
    const double t = ts::uniform(g, 0.1, 2.0);
    const auto [l1, l2] = oracle::eig2(h(0, 0), h(0, 1), h(1, 0), h(1, 1));
    const Operator u = expm(h, t);
    // det exp(A) = exp(tr A) and tr exp(A) = sum of exponentiated eigenvalues.
    const Complex e1 = std::exp(Complex(0.0, -t) * l1), e2 = std::exp(Complex(0.0, -t) * l2);
    const double scale = std::abs(e1) + std::abs(e2);
    EXPECT_LT(std::abs(u(0, 0) + u(1, 1) - (e1 + e2)), 1e-12 * scale);
    EXPECT_LT(std::abs(u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0) - e1 * e2), 1e-12 * scale * scale);
  }
}

TEST(Expm, FourByFourMatchesTaylorOracle) {
  auto g = ts::rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Operator h = ts::random_decaying(g, 4, 2.0);
    const double t = ts::uniform(g, 0.0, 3.0);
    EXPECT_LT(ts::max_abs_diff(expm(h, t), oracle::taylor_expm(ts::entries(h), 4, t)), 1e-12);
  }
}

TEST(Expm, RejectsNonFinite) {
  EXPECT_THROW(expm(Operator(2, {NAN, 0.0, 0.0, 0.0}), 1.0), Error);
  EXPECT_THROW(expm(Operator::identity(2), INFINITY), Error);
}

TEST(Kron, IndexIsTwoQ2PlusQ1) {
  // (X on qubit 2) ⊗ (identity on qubit 1) maps |q2 q1> = |00> to |10>, index 2.
  const Operator k = kron(pauli(Axis::kX), Operator::identity(2));
  EXPECT_TRUE(k.is_unitary());
  const StateVec out = k * StateVec::basis(4, 0);
  EXPECT_LT(max_abs_diff(out, StateVec::basis(4, 2)), 1e-15);
}

TEST(Probabilities, SquaredModuli) {
  const auto p = probabilities(StateVec{Complex(0.6, 0.0), Complex(0.0, 0.8)});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], 0.36, 1e-15);
  EXPECT_NEAR(p[1], 0.64, 1e-15);
}

}  // namespace
