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

#include "qeilab/testfn.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qeilab/error.hpp"
#include "csv.hpp"
#include "quadrature.hpp"

namespace qei {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBumpTarget = 1e-10;

std::complex<double> phase(double omega, double t0) {
  return t0 == 0.0 ? std::complex<double>(1.0, 0.0) : std::polar(1.0, omega * t0);
}

std::size_t oscillation_panels(double omega, double length) {
  const double periods = std::abs(omega) * length / (2.0 * kPi);
  return 1 + static_cast<std::size_t>(periods / 2.0);
}

}  // namespace

double convention_factor(Convention c) noexcept {
  return c == Convention::plain ? 1.0 : 1.0 / std::sqrt(2.0 * kPi);
}

std::string to_string(Convention c) { return c == Convention::plain ? "plain" : "normalized"; }

Convention parse_convention(const std::string& s) {
  if (s == "plain") return Convention::plain;
  if (s == "normalized") return Convention::normalized;
  throw invalid_argument("unknown transform convention '" + s + "' (expected plain|normalized)");
}

std::string to_string(TestFunction::Kind k) {
  switch (k) {
    case TestFunction::Kind::gaussian: return "gaussian";
    case TestFunction::Kind::bump: return "bump";
    case TestFunction::Kind::tabulated: return "tabulated";
  }
  return "unknown";
}

TestFunction TestFunction::gaussian(double sigma, double center) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw invalid_argument("gaussian: width sigma must be positive");
  if (!std::isfinite(center)) throw invalid_argument("gaussian: center must be finite");
  TestFunction f;
  f.kind_ = Kind::gaussian;
  f.sigma_ = sigma;
  f.center_ = center;
  return f;
}

TestFunction TestFunction::bump(double sigma, double center) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw invalid_argument("bump: width sigma must be positive");
  if (!std::isfinite(center)) throw invalid_argument("bump: center must be finite");
  TestFunction f;
  f.kind_ = Kind::bump;
  f.sigma_ = sigma;
  f.center_ = center;
  return f;
}

TestFunction TestFunction::tabulated(std::vector<double> samples, double t_start, double spacing) {
  if (samples.size() < 2) throw invalid_argument("tabulated: need at least two samples");
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw invalid_argument("tabulated: spacing must be positive");
  for (double v : samples)
    if (!std::isfinite(v)) throw invalid_argument("tabulated: non-finite sample");
  TestFunction f;
  f.kind_ = Kind::tabulated;
  const double span = spacing * static_cast<double>(samples.size() - 1);
  f.sigma_ = span / 2.0;
  f.center_ = t_start + span / 2.0;
  f.table_ = std::move(samples);
  f.t_start_ = t_start;
  f.spacing_ = spacing;
  return f;
}

TestFunction TestFunction::from_csv(const std::filesystem::path& path) {
  const auto rows = detail::read_numeric_csv(path, 2);
  if (rows.size() < 2) throw invalid_argument("tabulated CSV needs at least two rows: " + path.string());
  const double h = rows[1][0] - rows[0][0];
  if (!(h > 0.0)) throw invalid_argument("tabulated CSV: t must be increasing");
  std::vector<double> g;
  g.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double expected = rows[0][0] + h * static_cast<double>(i);
    if (std::abs(rows[i][0] - expected) > 1e-6 * h)
      throw invalid_argument("tabulated CSV: non-uniform spacing at row " + std::to_string(i + 1));
    g.push_back(rows[i][1]);
  }
  return tabulated(std::move(g), rows[0][0], h);
}

TestFunction TestFunction::scaled(double s) const {
  if (!std::isfinite(s)) throw invalid_argument("scaled: factor must be finite");
  TestFunction f = *this;
  f.amplitude_ *= s;
  return f;
}

bool TestFunction::is_zero() const noexcept {
  if (amplitude_ == 0.0) return true;
  if (kind_ != Kind::tabulated) return false;
  for (double v : table_)
    if (v != 0.0) return false;
  return true;
}

double TestFunction::operator()(double t) const noexcept {
  switch (kind_) {
    case Kind::gaussian: {
      const double x = (t - center_) / sigma_;
      return amplitude_ * std::exp(-0.5 * x * x);
    }
    case Kind::bump: {
      const double x = (t - center_) / sigma_;
      if (!(x * x < 1.0)) return 0.0;
      return amplitude_ * std::exp(-1.0 / (1.0 - x * x));
    }
    case Kind::tabulated: {
      const double u = (t - t_start_) / spacing_;
      if (u < 0.0 || u > static_cast<double>(table_.size() - 1)) return 0.0;
      const auto i = std::min(static_cast<std::size_t>(u), table_.size() - 2);
      const double frac = u - static_cast<double>(i);
      return amplitude_ * ((1.0 - frac) * table_[i] + frac * table_[i + 1]);
    }
  }
  return 0.0;
}

SpectralSample TestFunction::fourier(double omega, Convention c) const {
  SpectralSample s{omega, {}, 0.0};
  switch (kind_) {
    case Kind::gaussian: {
      const double mag = amplitude_ * sigma_ * std::sqrt(2.0 * kPi) *
                         std::exp(-0.5 * sigma_ * sigma_ * omega * omega);
      s.value = mag * phase(omega, center_);
      break;
    }
    case Kind::bump: s = bump_transform(omega, 1); break;
    case Kind::tabulated: s = table_transform(omega, 1); break;
  }
  const double cf = convention_factor(c);
  s.value *= cf;
  s.error *= cf;
  return s;
}

SpectralSample TestFunction::fourier_squared(double k, Convention c) const {
  SpectralSample s{k, {}, 0.0};
  switch (kind_) {
    case Kind::gaussian: {
      const double mag = amplitude_ * amplitude_ * sigma_ * std::sqrt(kPi) *
                         std::exp(-0.25 * sigma_ * sigma_ * k * k);
      s.value = mag * phase(k, center_);
      break;
    }
    case Kind::bump: s = bump_transform(k, 2); break;
    case Kind::tabulated: s = table_transform(k, 2); break;
  }
  const double cf = convention_factor(c);
  s.value *= cf;
  s.error *= cf;
  return s;
}

SpectralSample TestFunction::fourier_numeric(double omega, Convention c) const {
  if (kind_ != Kind::gaussian) return fourier(omega, c);
  const double lo = center_ - 14.0 * sigma_;
  const double hi = center_ + 14.0 * sigma_;
  auto integrand = [&](double t) { return std::polar((*this)(t), omega * t); };
  const auto r = detail::integrate(integrand, lo, hi, oscillation_panels(omega, hi - lo), 1e-14);
  const double cf = convention_factor(c);
  return {omega, cf * r.value, cf * r.error};
}

// e^{i w t0} * sigma * 2 Int_0^1 cos(w sigma x) h(x)^p dx, h the unit bump.
SpectralSample TestFunction::bump_transform(double omega, int power) const {
  const double ap = power == 1 ? amplitude_ : amplitude_ * amplitude_;
  const double p = static_cast<double>(power);
  auto integrand = [&](double x) {
    const double d = 1.0 - x * x;
    if (d <= 0.0) return 0.0;
    return std::cos(omega * sigma_ * x) * std::exp(-p / d);
  };
  const double periods = std::abs(omega * sigma_) / (2.0 * kPi);
  const auto panels = std::max<std::size_t>(32, 1 + static_cast<std::size_t>(4.0 * periods));
  const auto r = detail::integrate_fixed(integrand, 0.0, 1.0, panels);
  const double scale = 2.0 * sigma_ * ap;
  SpectralSample s{omega, scale * r.value * phase(omega, center_), std::abs(scale) * r.error};
  if (s.error > kBumpTarget)
    throw numerical_error("bump transform did not reach target error at omega=" +
                              std::to_string(omega),
                          s.error);
  return s;
}

// Trapezoid sum; error estimated from the half-resolution sum.
SpectralSample TestFunction::table_transform(double omega, int power) const {
  const double ap = power == 1 ? amplitude_ : amplitude_ * amplitude_;
  const std::size_t n = table_.size();
  auto term = [&](std::size_t i) {
    const double v = power == 1 ? table_[i] : table_[i] * table_[i];
    return std::polar(v, omega * (t_start_ + spacing_ * static_cast<double>(i)));
  };
  std::complex<double> fine{};
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    fine += w * term(i);
  }
  fine *= spacing_ * ap;
  double err = 0.0;
  if (n >= 3 && (n - 1) % 2 == 0) {
    std::complex<double> coarse{};
    for (std::size_t i = 0; i < n; i += 2) {
      const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
      coarse += w * term(i);
    }
    coarse *= 2.0 * spacing_ * ap;
    err = std::abs(fine - coarse) / 3.0;
  }
  return {omega, fine, err};
}

std::string TestFunction::describe() const {
  std::ostringstream os;
  os << to_string(kind_) << "(sigma=" << sigma_ << ", t0=" << center_;
  if (amplitude_ != 1.0) os << ", amplitude=" << amplitude_;
  if (kind_ == Kind::tabulated) os << ", samples=" << table_.size() << ", dt=" << spacing_;
  os << ")";
  return os.str();
}

std::complex<double> fourier_g(const TestFunction& f, double omega, Convention c) {
  return f.fourier(omega, c).value;
}

std::complex<double> fourier_gsq(const TestFunction& f, double k, Convention c) {
  return f.fourier_squared(k, c).value;
}

}  // namespace qei
