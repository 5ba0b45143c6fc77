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

#ifndef KAONSIM_PARALLEL_HPP_
#define KAONSIM_PARALLEL_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <span>
#include <string>
#include <vector>

#include "kaonsim/error.hpp"
#include "kaonsim/qmath.hpp"

namespace kaonsim {

/// kSerial is the reference path; kParallel splits independent samples or
/// grid points across OpenMP threads and must give bit-identical results.
enum class Exec { kSerial, kParallel };

/// Per-sample probabilities and norm.
struct Trajectory {
  int dim = 0;
  std::vector<double> times;
  std::vector<double> probs;  // row-major, times.size() x dim
  std::vector<double> norms;

  std::size_t size() const { return times.size(); }
  double prob(std::size_t sample, int component) const {
    return probs[sample * static_cast<std::size_t>(dim) + static_cast<std::size_t>(component)];
  }
};

inline void require_increasing(std::span<const double> times) {
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw Error("sample times must be strictly increasing");
  }
}

/// Runs `body(i)` for i in [0, n). Exceptions thrown by `body` are
/// rethrown as kaonsim::Error after the loop (first message wins).
template <typename Body>
void for_each_index(std::ptrdiff_t n, Body&& body, Exec exec) {
  if (exec == Exec::kSerial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::string failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (const std::exception& e) {
#pragma omp critical(kaonsim_for_each_failure)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw Error(failure);
}

inline Trajectory empty_trajectory(std::span<const double> times, int dim) {
  require_increasing(times);
  Trajectory out;
  out.dim = dim;
  out.times.assign(times.begin(), times.end());
  out.probs.assign(times.size() * static_cast<std::size_t>(dim), 0.0);
  out.norms.assign(times.size(), 0.0);
  return out;
}

/// Evaluates `state_at(t)` for every sample time and records |amplitude|^2
/// and the norm. Samples are independent, so the parallel path is a plain
/// `omp parallel for` over them.
template <typename StateAt>
Trajectory tabulate(std::span<const double> times, int dim, StateAt&& state_at,
                    Exec exec = Exec::kParallel) {
  Trajectory out = empty_trajectory(times, dim);
  for_each_index(
      static_cast<std::ptrdiff_t>(times.size()),
      [&](std::ptrdiff_t i) {
        const auto row = static_cast<std::size_t>(i);
        const qmath::StateVec psi = state_at(times[row]);
        double total = 0.0;
        for (int k = 0; k < dim; ++k) {
          const double pk = std::norm(psi[k]);
          out.probs[row * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)] = pk;
          total += pk;
        }
        out.norms[row] = std::sqrt(total);
      },
      exec);
  return out;
}

/// Applies `fn(point)` to every element of `points`, preserving order.
template <typename Result, typename Point, typename Fn>
std::vector<Result> map_points(std::span<const Point> points, Fn&& fn,
                               Exec exec = Exec::kParallel) {
  std::vector<Result> out(points.size());
  for_each_index(
      static_cast<std::ptrdiff_t>(points.size()),
      [&](std::ptrdiff_t i) {
        out[static_cast<std::size_t>(i)] = fn(points[static_cast<std::size_t>(i)]);
      },
      exec);
  return out;
}

}  // namespace kaonsim

#endif  // KAONSIM_PARALLEL_HPP_
