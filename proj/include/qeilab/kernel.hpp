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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qeilab/models.hpp"
#include "qeilab/testfn.hpp"

namespace qei {

/// Real polynomial P in x = cosh(theta - eta) with P(1) = 1.
class PolynomialP {
 public:
  /// Coefficients lowest degree first. |P(1) - 1| must be below 1e-12; the
  /// constant term is then reset so that P(1) = 1 holds exactly in the stored
  /// coefficients.
  static PolynomialP from_coefficients(std::vector<double> coefficients);
  /// P(x) = (1 - alpha) + alpha x.
  static PolynomialP linear(double alpha);
  static PolynomialP one() { return from_coefficients({1.0}); }

  double operator()(double x) const noexcept;
  /// Degree after dropping trailing zero coefficients.
  int degree() const noexcept;
  std::span<const double> coefficients() const noexcept { return coefficients_; }
  std::string describe() const;

 private:
  std::vector<double> coefficients_;
};

/// Quadrature nodes on [-cutoff, cutoff], strictly increasing and symmetric.
struct RapidityGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double cutoff = 0.0;
  std::string kind;

  std::size_t size() const noexcept { return nodes.size(); }
  /// Throws when the invariants do not hold.
  void validate() const;
};

/// Coefficients phi(theta_i) sqrt(w_i) on a RapidityGrid.
struct StateVector {
  std::vector<std::complex<double>> coefficients;

  std::size_t size() const noexcept { return coefficients.size(); }
  double norm() const noexcept;
  StateVector normalized() const;

  /// Samples a wave function phi(theta) on `grid`.
  static StateVector sample(const RapidityGrid& grid,
                            const std::function<std::complex<double>(double)>& phi);
  /// Function values phi_i / sqrt(w_i) at the grid nodes.
  std::vector<std::complex<double>> function_values(const RapidityGrid& grid) const;
};

struct KernelProvenance {
  std::string model;
  ModelKind model_kind = ModelKind::free;
  double mass = 1.0;
  std::vector<double> polynomial;
  std::string test_function;
  Convention convention = Convention::plain;
  std::string grid_kind;
  double cutoff = 0.0;
  std::size_t n = 0;
  double asymmetry = 0.0;  ///< relative defect before Hermitian averaging
};

/// Hermitian matrix M_ij = sqrt(w_i w_j) F^{00}(theta_i, theta_j).
class KernelMatrix {
 public:
  KernelMatrix(Eigen::MatrixXcd m, RapidityGrid grid, KernelProvenance provenance);

  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  const RapidityGrid& grid() const noexcept { return grid_; }
  const KernelProvenance& provenance() const noexcept { return provenance_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  /// Frobenius norm.
  double norm() const noexcept { return norm_; }
  double max_abs() const noexcept { return max_abs_; }
  /// max_ij |M_ij - conj(M_ji)| / max|M| after symmetrization.
  double hermiticity_defect() const noexcept;
  /// True when every entry has zero imaginary part.
  bool is_real() const noexcept { return real_; }

  /// CSV rows (i, j, Re, Im).
  void write_csv(const std::filesystem::path& path) const;
  /// JSON sidecar with the provenance record.
  std::string provenance_json() const;

 private:
  Eigen::MatrixXcd m_;
  RapidityGrid grid_;
  KernelProvenance provenance_;
  double norm_ = 0.0;
  double max_abs_ = 0.0;
  bool real_ = true;
};

/// Entry (alpha, beta) of the free Bose stress-energy kernel; alpha, beta in {0, 1}.
double f_free(double mass, int alpha, int beta, double theta, double eta);

/// P(cosh theta) F_min(theta + i pi).
std::complex<double> f_p(const Model& m, const PolynomialP& p, double theta);

/// F^{alpha beta}(theta, eta) = f_free * F_P(theta - eta) * (g^2)~(mu cosh theta - mu cosh eta).
std::complex<double> kernel_element(const Model& m, const PolynomialP& p, const TestFunction& g,
                                    int alpha, int beta, double theta, double eta,
                                    Convention c = Convention::plain);

/// Assembles the (0,0) kernel on `grid`. Throws if the pre-averaging
/// asymmetry exceeds 1e-10 relative.
KernelMatrix assemble(const Model& m, const PolynomialP& p, const TestFunction& g,
                      const RapidityGrid& grid, Convention c = Convention::plain);

/// phi^* M phi, accumulated in extended precision.
double quadratic_form(const KernelMatrix& k, const StateVector& phi);

}  // namespace qei
