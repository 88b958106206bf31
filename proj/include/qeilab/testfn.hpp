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

#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace qei {

/// Normalization of the Fourier transform f~(w) = c * Int dt e^{iwt} f(t).
/// `plain` uses c = 1, `normalized` uses c = (2 pi)^{-1/2}. The same choice is
/// applied to g (bound integral) and to g^2 (kernel).
enum class Convention { plain, normalized };

double convention_factor(Convention c) noexcept;
std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

struct SpectralSample {
  double argument = 0.0;
  std::complex<double> value;
  double error = 0.0;  ///< quadrature error estimate; 0 for closed forms
};

/// Real smearing function g of time. Immutable after construction.
///
/// Gaussian:  g(t) = a exp(-(t - t0)^2 / (2 sigma^2))
/// Bump:      g(t) = a exp(-1 / (1 - x^2)), x = (t - t0) / sigma, |x| < 1
/// Tabulated: uniform samples, linear interpolation, zero outside the table.
class TestFunction {
 public:
  enum class Kind { gaussian, bump, tabulated };

  static TestFunction gaussian(double sigma, double center = 0.0);
  static TestFunction bump(double sigma, double center = 0.0);
  static TestFunction tabulated(std::vector<double> samples, double t_start, double spacing);
  /// Two-column CSV (t, g(t)); uniform spacing required, optional header line.
  static TestFunction from_csv(const std::filesystem::path& path);

  /// Copy with g replaced by s * g.
  TestFunction scaled(double s) const;

  Kind kind() const noexcept { return kind_; }
  double width() const noexcept { return sigma_; }
  double center() const noexcept { return center_; }
  double amplitude() const noexcept { return amplitude_; }
  std::span<const double> table() const noexcept { return table_; }
  double table_start() const noexcept { return t_start_; }
  double table_spacing() const noexcept { return spacing_; }

  bool is_zero() const noexcept;
  bool compactly_supported() const noexcept { return kind_ != Kind::gaussian; }

  double operator()(double t) const noexcept;

  /// Transform of g at angular frequency omega.
  SpectralSample fourier(double omega, Convention c = Convention::plain) const;
  /// Transform of g^2 at k.
  SpectralSample fourier_squared(double k, Convention c = Convention::plain) const;
  /// Transform of g by adaptive quadrature regardless of kind; used to
  /// cross-check the closed forms.
  SpectralSample fourier_numeric(double omega, Convention c = Convention::plain) const;

  std::string describe() const;

 private:
  TestFunction() = default;

  SpectralSample bump_transform(double omega, int power) const;
  SpectralSample table_transform(double omega, int power) const;

  Kind kind_ = Kind::gaussian;
  double sigma_ = 1.0;
  double center_ = 0.0;
  double amplitude_ = 1.0;
  std::vector<double> table_;
  double t_start_ = 0.0;
  double spacing_ = 0.0;
};

std::string to_string(TestFunction::Kind k);

std::complex<double> fourier_g(const TestFunction& f, double omega,
                               Convention c = Convention::plain);
std::complex<double> fourier_gsq(const TestFunction& f, double k,
                                 Convention c = Convention::plain);

}  // namespace qei
