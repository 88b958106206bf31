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

#include "qeilab/kernel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "qeilab/error.hpp"
#include "quadrature.hpp"

namespace qei {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAsymmetryLimit = 1e-10;

}  // namespace

PolynomialP PolynomialP::from_coefficients(std::vector<double> coefficients) {
  if (coefficients.empty()) throw invalid_argument("polynomial needs at least one coefficient");
  double sum = 0.0;
  double scale = 0.0;
  for (double c : coefficients) {
    if (!std::isfinite(c)) throw invalid_argument("polynomial coefficients must be finite");
    sum += c;
    scale += std::abs(c);
  }
  if (std::abs(sum - 1.0) > 1e-12 * std::max(1.0, scale)) {
    std::ostringstream os;
    os << "polynomial must satisfy P(1) = 1 (got " << sum << ")";
    throw invalid_argument(os.str());
  }
  double rest = 0.0;
  for (std::size_t i = 1; i < coefficients.size(); ++i) rest += coefficients[i];
  coefficients[0] = 1.0 - rest;
  PolynomialP p;
  p.coefficients_ = std::move(coefficients);
  return p;
}

PolynomialP PolynomialP::linear(double alpha) {
  if (!std::isfinite(alpha)) throw invalid_argument("alpha must be finite");
  return from_coefficients({1.0 - alpha, alpha});
}

double PolynomialP::operator()(double x) const noexcept {
  if (x == 1.0) return 1.0;
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int PolynomialP::degree() const noexcept {
  for (std::size_t i = coefficients_.size(); i-- > 0;)
    if (coefficients_[i] != 0.0) return static_cast<int>(i);
  return 0;
}

std::string PolynomialP::describe() const {
  std::ostringstream os;
  os << "P(x) =";
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0.0 && coefficients_.size() > 1) continue;
    os << (first ? " " : " + ") << coefficients_[i];
    if (i == 1) os << " x";
    if (i > 1) os << " x^" << i;
    first = false;
  }
  return os.str();
}

void RapidityGrid::validate() const {
  const std::size_t n = nodes.size();
  if (n == 0 || weights.size() != n) throw invalid_argument("grid: nodes/weights size mismatch");
  if (!(cutoff > 0.0)) throw invalid_argument("grid: cutoff must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(weights[i] > 0.0)) throw invalid_argument("grid: weights must be positive");
    if (std::abs(nodes[i]) > cutoff * (1.0 + 1e-14))
      throw invalid_argument("grid: node outside [-cutoff, cutoff]");
    if (i > 0 && !(nodes[i] > nodes[i - 1]))
      throw invalid_argument("grid: nodes must be strictly increasing");
    if (std::abs(nodes[i] + nodes[n - 1 - i]) > 1e-12 * cutoff)
      throw invalid_argument("grid: nodes must be symmetric about 0");
  }
}

double StateVector::norm() const noexcept {
  long double acc = 0.0L;
  for (const auto& c : coefficients) acc += static_cast<long double>(std::norm(c));
  return static_cast<double>(std::sqrt(acc));
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw domain_error("cannot normalize the zero state");
  StateVector out = *this;
  for (auto& c : out.coefficients) c /= nrm;
  return out;
}

StateVector StateVector::sample(const RapidityGrid& grid,
                                const std::function<std::complex<double>(double)>& phi) {
  StateVector out;
  out.coefficients.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.coefficients[i] = phi(grid.nodes[i]) * std::sqrt(grid.weights[i]);
  return out;
}

std::vector<std::complex<double>> StateVector::function_values(const RapidityGrid& grid) const {
  if (grid.size() != size()) throw invalid_argument("state/grid dimension mismatch");
  std::vector<std::complex<double>> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = coefficients[i] / std::sqrt(grid.weights[i]);
  return out;
}

KernelMatrix::KernelMatrix(Eigen::MatrixXcd m, RapidityGrid grid, KernelProvenance provenance)
    : m_(std::move(m)), grid_(std::move(grid)), provenance_(std::move(provenance)) {
  norm_ = m_.norm();
  max_abs_ = m_.size() ? m_.cwiseAbs().maxCoeff() : 0.0;
  real_ = m_.size() == 0 || m_.imag().cwiseAbs().maxCoeff() == 0.0;
}

double KernelMatrix::hermiticity_defect() const noexcept {
  if (max_abs_ == 0.0) return 0.0;
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() / max_abs_;
}

void KernelMatrix::write_csv(const std::filesystem::path& path) const {
  std::FILE* f = std::fopen(path.string().c_str(), "w");
  if (!f) throw io_error("cannot write " + path.string());
  std::fprintf(f, "i,j,re,im\n");
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
      std::fprintf(f, "%td,%td,%.17g,%.17g\n", i, j, m_(i, j).real(), m_(i, j).imag());
  std::fclose(f);
}

std::string KernelMatrix::provenance_json() const {
  nlohmann::json j;
  j["model"] = provenance_.model;
  j["model_kind"] = to_string(provenance_.model_kind);
  j["mass"] = provenance_.mass;
  j["polynomial"] = provenance_.polynomial;
  j["test_function"] = provenance_.test_function;
  j["convention"] = to_string(provenance_.convention);
  j["grid"] = {{"kind", provenance_.grid_kind}, {"cutoff", provenance_.cutoff}, {"n", provenance_.n}};
  j["asymmetry_before_averaging"] = provenance_.asymmetry;
  j["frobenius_norm"] = norm_;
  return j.dump(2);
}

double f_free(double mass, int alpha, int beta, double theta, double eta) {
  if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1)
    throw invalid_argument("f_free: tensor indices must be 0 or 1");
  const double pref = mass * mass / (2.0 * kPi);
  const double s = theta + eta;
  if (alpha == 0 && beta == 0) {
    const double c = std::cosh(0.5 * s);
    return pref * c * c;
  }
  if (alpha == 1 && beta == 1) {
    const double sh = std::sinh(0.5 * s);
    return pref * sh * sh;
  }
  return 0.5 * pref * std::sinh(s);
}

std::complex<double> f_p(const Model& m, const PolynomialP& p, double theta) {
  return p(std::cosh(theta)) * m.fmin_shifted(theta);
}

std::complex<double> kernel_element(const Model& m, const PolynomialP& p, const TestFunction& g,
                                    int alpha, int beta, double theta, double eta, Convention c) {
  const double mu = m.mass();
  const double free = f_free(mu, alpha, beta, theta, eta);
  const auto fp = f_p(m, p, theta - eta);
  const auto gsq = g.fourier_squared(mu * std::cosh(theta) - mu * std::cosh(eta), c).value;
  return free * fp * gsq;
}

KernelMatrix assemble(const Model& m, const PolynomialP& p, const TestFunction& g,
                      const RapidityGrid& grid, Convention c) {
  grid.validate();
  const auto n = static_cast<Eigen::Index>(grid.size());
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
  if (!g.is_zero()) {
    std::vector<double> sw(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) sw[i] = std::sqrt(grid.weights[i]);
    detail::parallel_for(grid.size(), [&](std::size_t i) {
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const auto v = kernel_element(m, p, g, 0, 0, grid.nodes[i], grid.nodes[j], c);
        mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sw[i] * sw[j] * v;
      }
    });
  }
  const double max_abs = n ? mat.cwiseAbs().maxCoeff() : 0.0;
  double asym = 0.0;
  if (max_abs > 0.0) asym = (mat - mat.adjoint()).cwiseAbs().maxCoeff() / max_abs;
  if (!(asym <= kAsymmetryLimit))
    throw numerical_error("assembled kernel is not Hermitian (model evaluator broken?)", asym);
  Eigen::MatrixXcd herm = 0.5 * (mat + mat.adjoint());

  KernelProvenance prov;
  prov.model = m.name();
  prov.model_kind = m.kind();
  prov.mass = m.mass();
  prov.polynomial.assign(p.coefficients().begin(), p.coefficients().end());
  prov.test_function = g.describe();
  prov.convention = c;
  prov.grid_kind = grid.kind;
  prov.cutoff = grid.cutoff;
  prov.n = grid.size();
  prov.asymmetry = asym;
  return KernelMatrix(std::move(herm), grid, std::move(prov));
}

double quadratic_form(const KernelMatrix& k, const StateVector& phi) {
  if (phi.size() != k.size()) throw invalid_argument("quadratic_form: dimension mismatch");
  const auto& m = k.matrix();
  const auto n = static_cast<Eigen::Index>(k.size());
  long double re = 0.0L;
  long double im = 0.0L;
  for (Eigen::Index i = 0; i < n; ++i) {
    long double row_re = 0.0L;
    long double row_im = 0.0L;
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto a = m(i, j);
      const auto b = phi.coefficients[static_cast<std::size_t>(j)];
      row_re += static_cast<long double>(a.real()) * b.real() -
                static_cast<long double>(a.imag()) * b.imag();
      row_im += static_cast<long double>(a.real()) * b.imag() +
                static_cast<long double>(a.imag()) * b.real();
    }
    const auto ci = phi.coefficients[static_cast<std::size_t>(i)];
    // conj(ci) * row
    re += ci.real() * row_re + ci.imag() * row_im;
    im += ci.real() * row_im - ci.imag() * row_re;
  }
  const double nrm = phi.norm();
  const double tol = 1e-10 * k.norm() * nrm * nrm;
  if (std::abs(static_cast<double>(im)) > tol)
    throw numerical_error("quadratic form has a non-negligible imaginary part",
                          std::abs(static_cast<double>(im)));
  return static_cast<double>(re);
}

}  // namespace qei
