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

#include "qeilab/isingbound.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "qeilab/error.hpp"
#include "quadrature.hpp"

namespace qei {
namespace {

// Q(1 + t) = sqrt(2t) (4t/3 - 37t^2/15 + 1003t^3/280 - 47317t^4/10080 + O(t^5)).
constexpr double kSeriesLimit = 1e-4;
constexpr std::size_t kPanels = 32;

double q_series(double t) {
  const double poly = t * (4.0 / 3.0 + t * (-37.0 / 15.0 + t * (1003.0 / 280.0 - t * 47317.0 / 10080.0)));
  return std::sqrt(2.0 * t) * poly;
}

}  // namespace

double q_function(double u) {
  if (!(u >= 1.0)) throw domain_error("q_function: argument must be >= 1");
  if (std::isinf(u)) return 1.0;
  const double t = u - 1.0;
  if (t < kSeriesLimit) return q_series(t);
  const double root = std::sqrt(t * (u + 1.0));
  const double inv2 = 1.0 / (u * u);
  return root / u - inv2 * std::log1p(t + root);
}

std::vector<std::pair<double, double>> tabulate_q(double u_max, std::size_t count) {
  if (!(u_max > 1.0) || !std::isfinite(u_max)) throw invalid_argument("tabulate_q: u_max must exceed 1");
  if (count < 2) throw invalid_argument("tabulate_q: need at least 2 points");
  std::vector<std::pair<double, double>> out(count);
  const double h = (u_max - 1.0) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = (i + 1 == count) ? u_max : 1.0 + h * static_cast<double>(i);
    out[i] = {u, q_function(u)};
  }
  return out;
}

void write_q_csv(const std::filesystem::path& path, double u_max, std::size_t count) {
  const auto rows = tabulate_q(u_max, count);
  std::ofstream f(path);
  if (!f) throw io_error("cannot open " + path.string() + " for writing");
  f << "u,Q\n";
  char buf[64];
  for (const auto& [u, q] : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", u, q);
    f << buf;
  }
  if (!f) throw io_error("write failed: " + path.string());
}

BoundResult ising_bound(const TestFunction& g, double mass, const IsingBoundOptions& options) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw invalid_argument("ising_bound: mass must be positive");
  if (!(options.tail_tolerance > 0.0)) throw invalid_argument("ising_bound: tail_tolerance must be positive");

  BoundResult out;
  out.convention = options.convention;
  out.extrapolated = !g.compactly_supported();
  double cutoff = options.initial_cutoff > 0.0 ? options.initial_cutoff : mass + 8.0 / g.width();
  if (!(cutoff > mass)) throw invalid_argument("ising_bound: initial cutoff must exceed the mass");
  out.omega_cutoff = cutoff;
  if (g.is_zero()) return out;

  // w = mass (1 + s^2) removes the square-root onset of Q at w = mass.
  auto integrand = [&](double s) {
    const double omega = mass * (1.0 + s * s);
    const auto gt = g.fourier(omega, options.convention);
    return 2.0 * mass * s * omega * omega * std::norm(gt.value) * q_function(1.0 + s * s);
  };
  auto s_of = [&](double omega) { return std::sqrt(omega / mass - 1.0); };

  auto head = detail::integrate_fixed(integrand, 0.0, s_of(cutoff), kPanels);
  double total = head.value;
  double error = head.error;
  bool settled = false;
  double last = 0.0;
  for (int k = 0; k < options.max_doublings; ++k) {
    const double next = 2.0 * cutoff;
    auto seg = detail::integrate_fixed(integrand, s_of(cutoff), s_of(next), kPanels);
    total += seg.value;
    error += seg.error;
    last = std::abs(seg.value);
    cutoff = next;
    if (last <= options.tail_tolerance * std::abs(total)) {
      settled = true;
      break;
    }
  }
  const double scale = 1.0 / (4.0 * std::numbers::pi * std::numbers::pi);
  if (!settled)
    throw numerical_error("ising_bound: tail did not fall below tolerance", last * scale);
  out.value = -total * scale;
  out.error = (error + last) * scale;
  out.omega_cutoff = cutoff;
  return out;
}

}  // namespace qei
