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

#include "sinh_gordon.hpp"

#include <cmath>
#include <numbers>

#include "qeilab/error.hpp"
#include "quadrature.hpp"

namespace qei::detail {
namespace {

constexpr double kPi = std::numbers::pi;
// Beyond this the weight is below 4e^{-45}/45.
constexpr double kShiftedCutoff = 45.0;
constexpr double kTolerance = 1e-12;

}  // namespace

SinhGordonSolution::SinhGordonSolution(double coupling) : b_(coupling), asymptote_(0.0) {
  if (!(coupling > 0.0 && coupling < 2.0))
    throw invalid_argument("sinh_gordon: coupling B must lie in (0, 2)");
  const auto r = integrate([this](double x) { return 0.5 * weight(x); }, 0.0, kShiftedCutoff, 16,
                           1e-15);
  asymptote_ = std::exp(r.value);
}

// G(x) written with q = e^{-x}:
//   4 q / x * (1 - q^{B/2}) (1 - q^{1-B/2}) / ((1 + q)(1 - q^2)).
double SinhGordonSolution::weight(double x) const noexcept {
  if (x < 1e-8) return 0.25 * b_ * (2.0 - b_);
  const double q = std::exp(-x);
  const double a = -std::expm1(-0.5 * b_ * x);
  const double c = -std::expm1(-0.5 * (2.0 - b_) * x);
  const double d = -std::expm1(-2.0 * x);
  return 4.0 * q / x * a * c / ((1.0 + q) * d);
}

std::complex<double> SinhGordonSolution::shifted(double theta) const {
  if (theta == 0.0) return 1.0;
  const double k = theta / (2.0 * kPi);
  auto integrand = [&](double x) {
    const double s = std::sin(k * x);
    return weight(x) * s * s;
  };
  // sin^2(k x) has period pi / k; two panels per period.
  const double periods = kShiftedCutoff * std::abs(k) / kPi;
  const auto panels = std::max<std::size_t>(64, 1 + static_cast<std::size_t>(2.0 * periods));
  const auto r = integrate_fixed(integrand, 0.0, kShiftedCutoff, panels);
  if (r.error > kTolerance * std::max(1.0, std::abs(r.value)))
    throw numerical_error("sinh_gordon: F_min(theta + i pi) quadrature did not converge", r.error);
  return std::exp(r.value);
}

// Off the shifted line one exponential in sin^2 grows like e^{|beta| x},
// beta = 1 - Im(z)/pi, and the integral converges only conditionally on the
// real axis. The large-x part of G, G_inf(x) = 4 e^{-x} (1 - e^{-x}) / x, is
// integrated in closed form (Frullani) and only G - G_inf is left to
// quadrature; it decays like e^{-x (1 - |beta| + min(B, 2-B)/2)}.
std::complex<double> SinhGordonSolution::at(std::complex<double> zeta) const {
  const double tau = zeta.imag();
  if (tau < -1e-12 || tau > 2.0 * kPi + 1e-12)
    throw domain_error("sinh_gordon: F_min is evaluated only for 0 <= Im(zeta) <= 2 pi");
  if (tau == kPi) return shifted(zeta.real());

  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C w = (i * kPi - zeta) / kPi;
  const C p = 1.0 + i * w;
  const C q = 1.0 - i * w;
  if (std::abs(p) == 0.0 || std::abs(q) == 0.0) return 0.0;

  const double beta = std::min(1.0, std::abs(w.imag()));
  const double rate = 1.0 - beta + 0.5 * std::min(b_, 2.0 - b_);
  const double cutoff = std::min(3000.0, 40.0 / rate);
  auto integrand = [&](double x) -> C {
    const double g = weight(x);
    const double g_inf = x < 1e-8 ? 4.0 : -4.0 * std::exp(-x) * std::expm1(-x) / x;
    const C e_plus = std::exp(i * x * w);
    const C e_minus = std::exp(-i * x * w);
    return 0.5 * g - 0.25 * (g - g_inf) * (e_plus + e_minus);
  };
  const double periods = cutoff * std::abs(w.real()) / (2.0 * kPi);
  const auto panels = std::max<std::size_t>(static_cast<std::size_t>(cutoff) + 1,
                                            1 + static_cast<std::size_t>(2.0 * periods));
  const auto r = integrate_fixed(integrand, 0.0, cutoff, panels);
  if (r.error > kTolerance * std::max(1.0, std::abs(r.value)))
    throw numerical_error("sinh_gordon: F_min quadrature did not converge", r.error);
  const C log_f = r.value + (std::log(q) - std::log(q + 1.0)) + (std::log(p) - std::log(p + 1.0));
  return std::exp(log_f);
}

std::complex<double> SinhGordonSolution::s2(double theta) const {
  const double s = std::sin(0.5 * kPi * b_);
  const std::complex<double> num(std::sinh(theta), -s);
  const std::complex<double> den(std::sinh(theta), s);
  return num / den;
}

}  // namespace qei::detail
