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
#include <vector>

#include "kaonsim/error.hpp"
#include "kaonsim/scenarios.hpp"
#include "support.hpp"

namespace {

using namespace kaonsim::scenarios;
using kaonsim::Error;
using kaonsim::Exec;
using kaonsim::Trajectory;

// Extended-precision values from tests/golden/generate_golden.py.
constexpr double kRegenBeforeRatio = 4.58562066422073e-5;
constexpr double kRegenAfterRatio = 0.0978587039265135;

std::vector<double> grid(double t_max, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = t_max * i / (n - 1);
  return t;
}

KaonParams fig2() {
  KaonParams k;
  k.delta_m = 2.0;
  k.tau1 = 1.0;
  k.tau2 = 1000.0;
  return k;
}

TEST(Analytic, InitialAndCrossing) {
  const auto p0 = analytic_mixing(0.0, 1.0, 584.27, 0.477);
  EXPECT_EQ(p0.k0, 1.0);
  EXPECT_EQ(p0.k0bar, 0.0);
  const double t = std::acos(-1.0) / (2 * 0.477);
  const auto p = analytic_mixing(t, 1.0, 584.27, 0.477);
  EXPECT_NEAR(p.k0, p.k0bar, 1e-12);
  EXPECT_THROW(analytic_mixing(-1.0, 1.0, 1.0, 1.0), Error);
}

TEST(Analytic, SumIdentity) {
  for (double t : {0.0, 0.3, 2.0, 7.5, 100.0}) {
    const auto p = analytic_mixing(t, 1.0, 1000.0, 2.0);
    EXPECT_NEAR(p.k0 + p.k0bar, 0.5 * (std::exp(-t) + std::exp(-t / 1000.0)), 1e-15);
  }
}

TEST(SingleQubit, MatchesAnalytic) {
  const auto t = grid(10.0, 400);
  const KaonParams k = fig2();
  const Trajectory seq = single_qubit_sequence(t, k, Exec::kSerial);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto p = analytic_mixing(t[i], k.tau1, k.tau2, k.delta_m);
    EXPECT_NEAR(seq.prob(i, 0), p.k0, 1e-12);
    EXPECT_NEAR(seq.prob(i, 1), p.k0bar, 1e-12);
  }
}

TEST(SingleQubit, MassOnlyContributesAGlobalPhase) {
  const auto t = grid(5.0, 50);
  KaonParams k = fig2();
  const Trajectory a = single_qubit_sequence(t, k, Exec::kSerial);
  k.mass = 37.0;
  const Trajectory b = single_qubit_sequence(t, k, Exec::kSerial);
  for (std::size_t i = 0; i < a.probs.size(); ++i) EXPECT_NEAR(a.probs[i], b.probs[i], 1e-12);
}

TEST(SingleQubit, RejectsDrive) {
  KaonParams k = fig2();
  k.omega_x = 0.1;
  const auto t = grid(1.0, 3);
  EXPECT_THROW(single_qubit_sequence(t, k), Error);
  EXPECT_THROW(cpv_sequence(t, k, CpEpsilon{}), Error);
}

TEST(TwoQubit, MapsOntoFlavorProbabilities) {
  const auto t = grid(10.0, 400);
  const KaonParams k = fig2();
  const Trajectory tr = two_qubit_sequence(t, two_qubit_from_kaon(k, 100.0), Exec::kSerial);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto p = analytic_mixing(t[i], k.tau1, k.tau2, k.delta_m);
    EXPECT_NEAR(tr.prob(i, 2), p.k0, 1e-12);
    EXPECT_NEAR(tr.prob(i, 1), p.k0bar, 1e-12);
    EXPECT_LT(tr.prob(i, 0), 1e-14);
    EXPECT_LT(tr.prob(i, 3), 1e-14);
  }
}

TEST(TwoQubit, ParameterMap) {
  const KaonParams k = fig2();
  const TwoQubitParams p = two_qubit_from_kaon(k, 50.0);
  EXPECT_EQ(p.delta_m(), k.delta_m);
  EXPECT_EQ(p.tau01, k.tau1);
  EXPECT_EQ(p.tau10, k.tau2);
  EXPECT_EQ(p.g, 50.0);
}

TEST(Regeneration, RatiosMatchOracle) {
  KaonParams k;
  k.delta_m = 0.477;
  k.tau1 = 1.0;
  k.tau2 = 1000.0;
  k.omega_x = 2.0;
  const Regeneration r = regeneration(20.0, 0.1, k);
  const double before = std::abs(r.before[1]) / std::abs(r.before[0]);
  const double after = std::abs(r.c1) / std::abs(r.c2);
  EXPECT_NEAR(before / kRegenBeforeRatio, 1.0, 1e-10);
  EXPECT_NEAR(after / kRegenAfterRatio, 1.0, 1e-10);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Regeneration, LongLivedPhaseDuringFlight) {
  KaonParams k;
  k.mass = 1.3;
  k.delta_m = 0.477;
  k.tau1 = 1.0;
  k.tau2 = 1000.0;
  k.omega_x = 2.0;
  const double t1 = 20.0;
  const Regeneration r = regeneration(t1, 0.1, k);
  const auto want = std::exp(kaonsim::qmath::Complex(-t1 / (2 * k.tau2), -k.m2() * t1)) /
                    std::sqrt(2.0);
  EXPECT_LT(std::abs(r.before[0] - want), 1e-12);
}

TEST(Regeneration, WarnsOutsideRegime) {
  KaonParams k;
  k.delta_m = 0.477;
  k.tau1 = 1.0;
  k.tau2 = 1000.0;
  EXPECT_FALSE(regeneration(2.0, 1.0, k).warnings.empty());
  EXPECT_THROW(regeneration(-1.0, 0.1, k), Error);
}

TEST(Cpv, ZeroEpsilonReducesToMixing) {
  const auto t = grid(10.0, 100);
  const KaonParams k = fig2();
  const Trajectory a = cpv_sequence(t, k, CpEpsilon{}, Exec::kSerial);
  const Trajectory b = single_qubit_sequence(t, k, Exec::kSerial);
  for (std::size_t i = 0; i < a.probs.size(); ++i) EXPECT_NEAR(a.probs[i], b.probs[i], 1e-14);
}

TEST(Cpv, BothChannelsVanishThenReappear) {
  const auto t = grid(10.0, 1000);
  const Trajectory tr =
      cpv_sequence(t, fig2(), CpEpsilon{{0.525, 0.525}}, Exec::kSerial);
  for (int c = 0; c < 2; ++c) {
    std::size_t imin = 0;
    for (std::size_t i = 0; i < tr.size(); ++i)
      if (tr.prob(i, c) < tr.prob(imin, c)) imin = i;
    double later = 0.0;
    for (std::size_t i = imin; i < tr.size(); ++i) later = std::max(later, tr.prob(i, c));
    EXPECT_GT(imin, 0u);
    EXPECT_LT(tr.prob(imin, c), 0.0125);
    EXPECT_GE(later, 0.125);
  }
}

TEST(Names, RoundTrip) {
  for (auto s : {Scenario::kMixAnalytic, Scenario::kMixQubit, Scenario::kMixTwoQubit,
                 Scenario::kCpv})
    EXPECT_EQ(parse_scenario(scenario_name(s)), s);
  EXPECT_THROW(parse_scenario("spectra"), Error);
}

TEST(Sweep, PreservesGridOrder) {
  std::vector<SweepPoint> pts;
  for (double dm : {0.1, 1.0, 5.0}) {
    SweepPoint p;
    p.kaon = fig2();
    p.kaon.delta_m = dm;
    pts.push_back(p);
  }
  const auto t = grid(3.0, 20);
  const auto out = sweep(Scenario::kMixQubit, pts, t);
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const auto p = analytic_mixing(t[7], 1.0, 1000.0, pts[j].kaon.delta_m);
    EXPECT_NEAR(out[j].prob(7, 0), p.k0, 1e-12);
  }
  EXPECT_THROW(sweep(Scenario::kCpv, std::vector<SweepPoint>{}, t), Error);
}

}  // namespace
