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


// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <vector>

#include "kaonsim/scenarios.hpp"

namespace {

using namespace kaonsim;

std::vector<double> times(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = 10.0 * static_cast<double>(i) / static_cast<double>(n - 1);
  return t;
}

kaon::KaonParams fig2() {
  kaon::KaonParams k;
  k.delta_m = 2.0;
  k.tau2 = 1000.0;
  return k;
}

Exec mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Exec::kSerial : Exec::kParallel;
}

void BM_SingleQubit(benchmark::State& state) {
  const auto t = times(static_cast<std::size_t>(state.range(0)));
  const auto k = fig2();
  for (auto _ : state) benchmark::DoNotOptimize(scenarios::single_qubit_sequence(t, k, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TwoQubit(benchmark::State& state) {
  const auto t = times(static_cast<std::size_t>(state.range(0)));
  const auto p = scenarios::two_qubit_from_kaon(fig2(), 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(scenarios::two_qubit_sequence(t, p, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Sweep(benchmark::State& state) {
  std::vector<scenarios::SweepPoint> grid;
  for (int i = 0; i < state.range(0); ++i) {
    scenarios::SweepPoint s;
    s.kaon = fig2();
    s.kaon.delta_m = 0.1 + 0.05 * i;
    s.epsilon.value = {0.525, 0.525};
    grid.push_back(s);
  }
  const auto t = times(1000);
  for (auto _ : state)
    benchmark::DoNotOptimize(scenarios::sweep(scenarios::Scenario::kCpv, grid, t, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 1000);
}

// Second argument: 0 serial, 1 OpenMP.
BENCHMARK(BM_SingleQubit)->ArgsProduct({{1000, 100000}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TwoQubit)->ArgsProduct({{1000, 10000}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Sweep)->ArgsProduct({{16, 128}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
