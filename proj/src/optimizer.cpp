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

#include "qeilab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qeilab/error.hpp"
#include "quadrature.hpp"

namespace qei {
namespace {

using LD = long double;
using CLD = std::complex<LD>;

constexpr int kMaxRefinementSteps = 8;
constexpr double kEps = std::numeric_limits<double>::epsilon();

template <class S>
CLD widen(S s) {
  if constexpr (std::is_same_v<S, double>) {
    return CLD(static_cast<LD>(s), 0.0L);
  } else {
    return CLD(static_cast<LD>(s.real()), static_cast<LD>(s.imag()));
  }
}

template <class S>
S narrow(CLD z) {
  if constexpr (std::is_same_v<S, double>) {
    return static_cast<double>(z.real());
  } else {
    return S(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
}

// a * v with long double accumulation.
template <class Mat, class Vec>
std::vector<CLD> matvec(const Mat& a, const Vec& v) {
  const Eigen::Index n = a.rows();
  std::vector<CLD> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    CLD acc = 0.0L;
    for (Eigen::Index j = 0; j < n; ++j) acc += widen(a(i, j)) * widen(v(j));
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

template <class Mat, class Vec>
LD rayleigh(const Mat& a, const Vec& v) {
  const auto av = matvec(a, v);
  LD num = 0.0L;
  LD den = 0.0L;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const CLD vi = widen(v(i));
    num += (std::conj(vi) * av[static_cast<std::size_t>(i)]).real();
    den += std::norm(vi);
  }
  return num / den;
}

template <class Mat, class Vec>
LD residual_norm(const Mat& a, const Vec& v, LD lambda) {
  const auto av = matvec(a, v);
  LD acc = 0.0L;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    acc += std::norm(av[static_cast<std::size_t>(i)] - lambda * widen(v(i)));
  return std::sqrt(acc);
}

// Largest-magnitude component made real and positive.
template <class Vec>
void fix_phase(Vec& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const auto c = v(imax);
  if constexpr (std::is_same_v<typename Vec::Scalar, double>) {
    if (c < 0.0) v = -v;
  } else {
    if (std::abs(c) > 0.0) v *= std::conj(c) / std::abs(c);
  }
}

template <class Mat>
EigenPair lowest_pair(const Mat& a, const RapidityGrid& grid, double frob) {
  using Scalar = typename Mat::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = a.rows();

  Eigen::SelfAdjointEigenSolver<Mat> es(a);
  if (es.info() != Eigen::Success)
    throw numerical_error("dense Hermitian eigensolver did not converge", 0.0);
  const auto& evals = es.eigenvalues();
  const double spectral = std::max(std::abs(evals(0)), std::abs(evals(n - 1)));

  // Eigenvalues closer than the solver's resolution count as degenerate.
  const double resolution = 64.0 * kEps * spectral;
  Eigen::Index centre = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(grid.nodes[i]) < best) {
      best = std::abs(grid.nodes[i]);
      centre = static_cast<Eigen::Index>(i);
    }
  }
  Eigen::Index pick = 0;
  std::size_t multiplicity = 1;
  for (Eigen::Index k = 1; k < n && evals(k) - evals(0) <= resolution; ++k) {
    ++multiplicity;
    if (std::abs(es.eigenvectors()(centre, k)) > std::abs(es.eigenvectors()(centre, pick)) + 1e-14)
      pick = k;
  }

  EigenPair out;
  out.raw_value = evals(pick);
  out.degenerate = multiplicity > 1;
  out.multiplicity = multiplicity;

  Vec v = es.eigenvectors().col(pick);
  v.normalize();
  LD lambda = rayleigh(a, v);
  LD res = residual_norm(a, v, lambda);

  if (spectral > 0.0) {
    // Bordered Newton step: [A - l I, -v; v^H, 0] [dv; dl] = [-r; 0].
    const double band = 1e3 * kEps * spectral;
    Vec cur = v;
    LD cur_lambda = lambda;
    for (int step = 0; step < kMaxRefinementSteps; ++step) {
      const auto av = matvec(a, cur);
      Vec rhs(n + 1);
      for (Eigen::Index i = 0; i < n; ++i)
        rhs(i) = narrow<Scalar>(-(av[static_cast<std::size_t>(i)] - cur_lambda * widen(cur(i))));
      rhs(n) = Scalar(0);
      Mat b = Mat::Zero(n + 1, n + 1);
      b.topLeftCorner(n, n) = a;
      b.topLeftCorner(n, n).diagonal().array() -= Scalar(static_cast<double>(cur_lambda));
      b.col(n).head(n) = -cur;
      b.row(n).head(n) = cur.adjoint();
      const Vec sol = b.partialPivLu().solve(rhs);
      if (!sol.allFinite()) break;
      Vec next = cur + sol.head(n);
      next.normalize();
      const LD next_lambda = rayleigh(a, next);
      const LD next_res = residual_norm(a, next, next_lambda);
      if (!(next_res < res) || std::abs(static_cast<double>(next_lambda) - out.raw_value) > band)
        break;
      const LD change = std::abs(next_lambda - cur_lambda);
      cur = next;
      cur_lambda = next_lambda;
      res = next_res;
      ++out.refinement_steps;
      if (change <= 4.0L * std::numeric_limits<LD>::epsilon() * std::abs(cur_lambda)) break;
    }
    v = cur;
  }

  fix_phase(v);
  lambda = rayleigh(a, v);
  res = residual_norm(a, v, lambda);
  if (static_cast<double>(res) > 1e-10 * std::max(frob, std::numeric_limits<double>::min()) &&
      frob > 0.0)
    throw numerical_error("lowest eigenpair residual above 1e-10 ||M||", static_cast<double>(res));

  out.value = static_cast<double>(lambda);
  out.residual = static_cast<double>(res);
  out.vector.coefficients.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<Scalar, double>) {
      out.vector.coefficients[static_cast<std::size_t>(i)] = {v(i), 0.0};
    } else {
      out.vector.coefficients[static_cast<std::size_t>(i)] = v(i);
    }
  }
  return out;
}

RapidityGrid gauss_legendre_grid(double cutoff, std::size_t n) {
  const auto gl = detail::gauss_legendre(n);
  RapidityGrid g;
  g.cutoff = cutoff;
  g.kind = to_string(GridKind::gauss_legendre);
  g.nodes.resize(n);
  g.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.nodes[i] = cutoff * gl.nodes[i];
    g.weights[i] = cutoff * gl.weights[i];
  }
  return g;
}

}  // namespace

std::string to_string(GridKind k) {
  return k == GridKind::gauss_legendre ? "gauss_legendre" : "composite";
}

GridKind parse_grid_kind(const std::string& s) {
  if (s == "gauss_legendre") return GridKind::gauss_legendre;
  if (s == "composite") return GridKind::composite;
  throw invalid_argument("unknown grid kind '" + s + "' (expected gauss_legendre|composite)");
}

RapidityGrid make_grid(double cutoff, std::size_t n) {
  return make_grid(cutoff, n, GridOptions{GridKind::gauss_legendre});
}

RapidityGrid make_grid(double cutoff, std::size_t n, const GridOptions& options) {
  if (n == 0) throw invalid_argument("make_grid: n must be positive");
  if (!(cutoff > 0.0) || !std::isfinite(cutoff))
    throw invalid_argument("make_grid: cutoff must be positive");
  if (options.kind == GridKind::gauss_legendre || !(cutoff > 1.25 * options.core_cutoff) || n < 16)
    return gauss_legendre_grid(cutoff, n);
  if (!(options.core_cutoff > 0.0) || !(options.core_fraction > 0.0 && options.core_fraction < 1.0))
    throw invalid_argument("make_grid: invalid composite grid options");

  auto core_n = static_cast<std::size_t>(std::lround(options.core_fraction * static_cast<double>(n)));
  if ((n - core_n) % 2 != 0) ++core_n;
  if (core_n >= n || (n - core_n) / 2 < 2) return gauss_legendre_grid(cutoff, n);
  const std::size_t outer_n = (n - core_n) / 2;

  const auto core = detail::gauss_legendre(core_n);
  const auto outer = detail::gauss_legendre(outer_n);
  const double mid = 0.5 * (cutoff + options.core_cutoff);
  const double half = 0.5 * (cutoff - options.core_cutoff);

  RapidityGrid g;
  g.cutoff = cutoff;
  g.kind = to_string(GridKind::composite);
  g.nodes.resize(n);
  g.weights.resize(n);
  // Right outer panel, mirrored onto the left so the grid is exactly symmetric.
  for (std::size_t i = 0; i < outer_n; ++i) {
    const double x = mid + half * outer.nodes[i];
    const double w = half * outer.weights[i];
    g.nodes[n - outer_n + i] = x;
    g.weights[n - outer_n + i] = w;
    g.nodes[outer_n - 1 - i] = -x;
    g.weights[outer_n - 1 - i] = w;
  }
  for (std::size_t i = 0; i < core_n; ++i) {
    g.nodes[outer_n + i] = options.core_cutoff * core.nodes[i];
    g.weights[outer_n + i] = options.core_cutoff * core.weights[i];
  }
  return g;
}

EigenPair min_eigenpair(const KernelMatrix& k) {
  if (k.size() == 0) throw invalid_argument("min_eigenpair: empty matrix");
  if (k.is_real()) {
    const Eigen::MatrixXd a = k.matrix().real();
    return lowest_pair(a, k.grid(), k.norm());
  }
  return lowest_pair(k.matrix(), k.grid(), k.norm());
}

double boundary_mass(const RapidityGrid& grid, const StateVector& phi) {
  if (grid.size() != phi.size()) throw invalid_argument("boundary_mass: dimension mismatch");
  double mass = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (std::abs(grid.nodes[i]) > grid.cutoff - 1.0) mass += std::norm(phi.coefficients[i]);
  return mass;
}

ConvergedBound best_constant(const Model& m, const PolynomialP& p, const TestFunction& g,
                             std::span<const LadderStage> ladder,
                             const BestConstantOptions& options) {
  if (ladder.empty()) throw invalid_argument("best_constant: ladder must not be empty");
  if (!(options.tolerance > 0.0)) throw invalid_argument("best_constant: tolerance must be positive");
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    if (!(ladder[i].n > ladder[i - 1].n) || ladder[i].cutoff < ladder[i - 1].cutoff)
      throw invalid_argument("best_constant: ladder must strictly refine (n increasing, cutoff non-decreasing)");
  }

  ConvergedBound out;
  for (const auto& stage : ladder) {
    double cutoff = stage.cutoff;
    for (int ext = 0;; ++ext) {
      auto grid = make_grid(cutoff, stage.n, options.grid);
      const auto kernel = assemble(m, p, g, grid, options.convention);
      const auto pair = min_eigenpair(kernel);
      LadderEntry e;
      e.cutoff = cutoff;
      e.n = stage.n;
      e.lambda = pair.value;
      e.boundary_mass = boundary_mass(grid, pair.vector);
      e.hermiticity_defect = kernel.provenance().asymmetry;
      e.norm = kernel.norm();
      e.extension = ext > 0;
      out.ladder.push_back(e);
      out.lambda_min = pair.value;
      out.witness = pair.vector;
      out.degenerate = pair.degenerate;
      out.residual = pair.residual;
      out.grid = std::move(grid);
      // A zero matrix has no meaningful witness location.
      if (kernel.norm() == 0.0 || e.boundary_mass < options.boundary_mass_limit ||
          ext >= options.max_cutoff_extensions)
        break;
      cutoff += options.cutoff_step;
    }
  }

  const auto& lad = out.ladder;
  if (lad.size() >= 2) {
    out.error_estimate = std::abs(lad.back().lambda - lad[lad.size() - 2].lambda);
  } else {
    out.error_estimate = lad.back().norm == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  out.converged =
      out.error_estimate < options.tolerance * std::max(1.0, std::abs(out.lambda_min));
  return out;
}

}  // namespace qei
