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

// Reference values and independent formulas shared by the tests. Frozen
// numbers come from 30-40 digit mpmath evaluations done outside this repo;
// nothing here calls into the library.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace ref {

constexpr double pi = std::numbers::pi;

// Q(u) at u = 2 and u = 1 + 1e-5 (the double nearest to it).
constexpr double q_at_2 = 0.536785929553234;
constexpr double q_near_1 = 5.96273762897e-8;

// Ising bound, gaussian sigma, t0 = 0, mu = 1.
struct BoundCase {
  double sigma;
  double plain;
  double normalized;
};
constexpr BoundCase ising_bounds[] = {
    {0.5, -0.0730244858273702, -0.0116222078861700},
    {1.0, -0.0104724522658276, -0.00166674254440038},
    {2.0, -1.12775476767161e-4, -1.79487745870388e-5},
};
constexpr double ising_bound_sigma1_mu2 = -0.00022555095353432147;
// Bump, sigma = 1, mu = 1, plain (scipy QAWO inner transform, 1e-13 relative).
constexpr double ising_bound_bump = -0.02076515655575762;

// Bump transform, sigma = 1, plain convention.
struct Sample {
  double x;
  double value;
};
constexpr Sample bump_transform[] = {
    {1.0, 0.409859132390344354},     {10.0, 0.0146230866551327086},
    {30.0, -0.000178640572579072633}, {100.0, 2.23500206714152180e-6},
    {300.0, 3.08801193987631703e-10},
};

// sinh-Gordon at B = 1: F_min(theta + i pi).
constexpr Sample sinh_gordon_shifted[] = {
    {0.5, 1.00836983380098}, {5.0, 1.24297058945809},  {10.0, 1.26652342764043},
    {20.0, 1.26686860744481}, {40.0, 1.26686863974292},
};
struct ComplexSample {
  std::complex<double> z;
  std::complex<double> value;
};
inline const ComplexSample sinh_gordon_fmin[] = {
    {{0.5, 0.3}, {0.541431595763778, -0.397655534116721}},
    {{0.5, 0.0}, {0.339897141814113, -0.652274427020705}},
    {{1.0, 0.0}, {0.902418269060139, -0.767884064397622}},
    {{2.0, 0.0}, {1.35348260641802, -0.373182988650361}},
};

// Closed forms written out independently of the library.
inline double gaussian_sq_transform(double sigma, double k) {
  return sigma * std::sqrt(pi) * std::exp(-sigma * sigma * k * k / 4.0);
}

inline double gaussian_transform(double sigma, double w) {
  return sigma * std::sqrt(2.0 * pi) * std::exp(-sigma * sigma * w * w / 2.0);
}

// Energy-density kernel for a centred gaussian, mu = 1, plain convention.
inline double kernel(bool ising, double sigma, double theta, double eta) {
  const double c = std::cosh(0.5 * (theta + eta));
  const double fp = ising ? std::cosh(0.5 * (theta - eta)) : 1.0;
  return c * c / (2.0 * pi) * fp *
         gaussian_sq_transform(sigma, std::cosh(theta) - std::cosh(eta));
}

// Adaptive Gauss-Kronrod (7, 15) with an absolute tolerance. Boost's
// integrator only takes a relative one, which cannot be met by inner
// integrals that cancel to nearly zero.
template <class F>
double adaptive_gk15(F&& f, double a, double b, double tol, int depth = 40) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const auto& kx = gauss_kronrod<double, 15>::abscissa();
  const auto& kw = gauss_kronrod<double, 15>::weights();
  const auto& gx = gauss<double, 7>::abscissa();
  const auto& gw = gauss<double, 7>::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k = kw[0] * f(c);
  for (std::size_t i = 1; i < kx.size(); ++i) k += kw[i] * (f(c - h * kx[i]) + f(c + h * kx[i]));
  double g = gw[0] * f(c);
  for (std::size_t i = 1; i < gx.size(); ++i) g += gw[i] * (f(c - h * gx[i]) + f(c + h * gx[i]));
  k *= h;
  g *= h;
  if (std::abs(k - g) <= tol || depth == 0) return k;
  return adaptive_gk15(f, a, c, 0.5 * tol, depth - 1) + adaptive_gk15(f, c, b, 0.5 * tol, depth - 1);
}

// Re Int Int conj(phi(t)) K(t, e) phi(e) dt de by nested adaptive quadrature.
template <class Phi>
double energy_2d(bool ising, double sigma, Phi&& phi, double lo, double hi) {
  auto outer = [&](double t) {
    const auto pt = std::conj(phi(t));
    auto inner = [&](double e) { return (pt * kernel(ising, sigma, t, e) * phi(e)).real(); };
    return adaptive_gk15(inner, lo, hi, 1e-13);
  };
  return adaptive_gk15(outer, lo, hi, 1e-12);
}

}  // namespace ref
