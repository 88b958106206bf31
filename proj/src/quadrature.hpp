// Copyright 2026 The qeilab Authors.
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

// Internal numerical helpers shared by the modules. Not installed.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qei::detail {

struct NodesWeights {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss–Legendre rule on [-1, 1], nodes increasing.
NodesWeights gauss_legendre(std::size_t n);

template <class T>
struct Integral {
  T value{};
  double error = 0.0;
};

// Adaptive 61-point Gauss–Kronrod over [a, b], split into `panels` equal
// pieces first so oscillatory integrands are not under-sampled by the
// initial rule. The tolerance is relative to the L1 norm of each panel.
template <class F>
auto integrate(F&& f, double a, double b, std::size_t panels = 1, double rel_tol = 1e-13,
               unsigned max_depth = 18) -> Integral<decltype(f(a))> {
  using K = decltype(f(a));
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  Integral<K> out;
  panels = std::max<std::size_t>(panels, 1);
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double hi = (p + 1 == panels) ? b : lo + h;
    double err = 0.0;
    double l1 = 0.0;
    out.value += GK::integrate(f, lo, hi, max_depth, rel_tol, &err, &l1);
    out.error += err;
  }
  return out;
}

// Composite Gauss–Legendre over [a, b] with `panels` equal panels, 24 nodes
// each. The error is the difference to the 16-node rule. Meant for smooth
// integrands whose oscillation is resolved by the panel width.
template <class F>
auto integrate_fixed(F&& f, double a, double b, std::size_t panels) -> Integral<decltype(f(a))> {
  using K = decltype(f(a));
  static const NodesWeights hi = gauss_legendre(24);
  static const NodesWeights lo = gauss_legendre(16);
  panels = std::max<std::size_t>(panels, 1);
  const double h = (b - a) / static_cast<double>(panels);
  K sum_hi{};
  K sum_lo{};
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + h * (static_cast<double>(p) + 0.5);
    K s_hi{};
    K s_lo{};
    for (std::size_t i = 0; i < hi.nodes.size(); ++i) s_hi += hi.weights[i] * f(mid + 0.5 * h * hi.nodes[i]);
    for (std::size_t i = 0; i < lo.nodes.size(); ++i) s_lo += lo.weights[i] * f(mid + 0.5 * h * lo.nodes[i]);
    sum_hi += 0.5 * h * s_hi;
    sum_lo += 0.5 * h * s_lo;
  }
  return {sum_hi, std::abs(sum_hi - sum_lo)};
}

// Runs body(i) for i in [0, n) on up to hardware_concurrency threads with a
// static partition. Each index is handled by exactly one thread, so results
// written per index do not depend on scheduling. The first exception thrown by
// any worker is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::mutex mu;
  std::exception_ptr failure;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) body(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace qei::detail
