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

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qeilab/error.hpp"
#include "qeilab/optimizer.hpp"

using namespace qei;
using C = std::complex<double>;

namespace {

const LadderStage kLadder[] = {{8.0, 256}, {12.0, 512}};

KernelMatrix ising_kernel(double sigma, const RapidityGrid& grid) {
  return assemble(Model::make(ModelKind::ising, 1.0), PolynomialP::one(),
                  TestFunction::gaussian(sigma), grid);
}

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("Gauss-Legendre grids") {
  const auto two = make_grid(1.0, 2);
  CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t n : {5u, 64u, 257u}) {
    for (const auto& g : {make_grid(7.5, n), make_grid(12.0, n, GridOptions{})}) {
      const double sum = std::accumulate(g.weights.begin(), g.weights.end(), 0.0);
      CHECK(sum == doctest::Approx(15.0 * g.cutoff / 7.5).epsilon(1e-13));
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(g.nodes[i] == -g.nodes[n - 1 - i]);
        CHECK(g.weights[i] == g.weights[n - 1 - i]);
      }
      g.validate();
    }
  }
  const auto comp = make_grid(8.0, 256, GridOptions{});
  CHECK(comp.kind == "composite");
  CHECK(make_grid(4.5, 256, GridOptions{}).kind == "gauss_legendre");
  CHECK(parse_grid_kind("composite") == GridKind::composite);
  CHECK_THROWS_AS(parse_grid_kind("simpson"), Error);
  CHECK_THROWS_AS(make_grid(0.0, 4), Error);
  CHECK_THROWS_AS(make_grid(1.0, 0), Error);
}

TEST_CASE("zero matrix") {
  const auto grid = make_grid(4.0, 16);
  const auto k = assemble(Model::make(ModelKind::ising, 1.0), PolynomialP::one(),
                          TestFunction::gaussian(1.0).scaled(0.0), grid);
  const auto e = min_eigenpair(k);
  CHECK(e.value == 0.0);
  CHECK(e.vector.norm() == doctest::Approx(1.0));
  const auto b = best_constant(Model::make(ModelKind::ising, 1.0), PolynomialP::one(),
                               TestFunction::gaussian(1.0).scaled(0.0),
                               std::span<const LadderStage>(kLadder, 1));
  CHECK(b.lambda_min == 0.0);
  CHECK(b.converged);
}

TEST_CASE("free model is positive") {
  for (double s : {0.5, 1.0, 2.0}) {
    const auto k = assemble(Model::make(ModelKind::free, 1.0), PolynomialP::one(),
                            TestFunction::gaussian(s), make_grid(8.0, 256));
    CHECK(min_eigenpair(k).value >= -1e-10 * k.norm());
  }
  const auto b = best_constant(Model::make(ModelKind::free, 1.0), PolynomialP::one(),
                               TestFunction::gaussian(1.0), kLadder);
  CHECK(std::abs(b.lambda_min) <= 1e-8 * b.ladder.back().norm);
  CHECK(b.converged);
}

TEST_CASE("ising minimum is negative and self-consistent") {
  const auto grid = make_grid(8.0, 256, GridOptions{});
  const auto k = ising_kernel(1.0, grid);
  const auto e = min_eigenpair(k);
  CHECK(e.value < 0.0);
  CHECK(e.vector.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.residual <= 1e-10 * k.norm());
  CHECK(std::abs(quadratic_form(k, e.vector) - e.value) <= 1e-12 * std::abs(e.value));

  // Variational property on explicit trial states.
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 10; ++trial) {
    StateVector v;
    for (std::size_t i = 0; i < grid.size(); ++i) v.coefficients.emplace_back(n(rng), n(rng));
    const double nv = v.norm();
    CHECK(quadratic_form(k, v) / (nv * nv) >= e.value - 1e-12 * k.norm());
  }
  auto bumpy = [](double t) { return std::exp(C(-t * t, 5.0 * t)); };
  const auto trial = StateVector::sample(grid, bumpy);
  CHECK(quadratic_form(k, trial) / std::pow(trial.norm(), 2) >= e.value - 1e-12 * k.norm());
}

TEST_CASE("best constant converges for ising") {
  const auto b = best_constant(Model::make(ModelKind::ising, 1.0), PolynomialP::one(),
                               TestFunction::gaussian(1.0), kLadder);
  CHECK(b.lambda_min < 0.0);
  CHECK(b.converged);
  REQUIRE(b.ladder.size() == 2);
  const double l8 = b.ladder[0].lambda;
  const double l12 = b.ladder[1].lambda;
  CHECK(std::abs(l12 - l8) < 1e-5 * std::abs(l12));
  CHECK(b.ladder.back().boundary_mass < 1e-8);
  const auto values = b.witness_function();
  CHECK(values.size() == b.grid.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    CHECK(std::abs(values[i] * std::sqrt(b.grid.weights[i]) - b.witness.coefficients[i]) < 1e-15);
}

TEST_CASE("ladder differences shrink") {
  const LadderStage ladder[] = {{8.0, 256}, {10.0, 384}, {12.0, 512}};
  const auto b = best_constant(Model::make(ModelKind::ising, 1.0), PolynomialP::one(),
                               TestFunction::gaussian(0.5), ladder);
  REQUIRE(b.ladder.size() == 3);
  const double d1 = std::abs(b.ladder[1].lambda - b.ladder[0].lambda);
  const double d2 = std::abs(b.ladder[2].lambda - b.ladder[1].lambda);
  CHECK(d2 < d1);
}

TEST_CASE("scaling by s squared") {
  const auto grid = make_grid(8.0, 256, GridOptions{});
  const auto g = TestFunction::gaussian(1.0);
  const auto base = min_eigenpair(ising_kernel(1.0, grid)).value;
  for (double s : {0.5, 3.0}) {
    const auto k = assemble(Model::make(ModelKind::ising, 1.0), PolynomialP::one(), g.scaled(s), grid);
    CHECK(std::abs(min_eigenpair(k).value - s * s * base) <= 1e-12 * std::abs(s * s * base));
  }
}

TEST_CASE("single stage is not converged") {
  const auto b = best_constant(Model::make(ModelKind::ising, 1.0), PolynomialP::one(),
                               TestFunction::gaussian(1.0), std::span<const LadderStage>(kLadder, 1));
  CHECK_FALSE(b.converged);
  CHECK(std::isinf(b.error_estimate));
}

TEST_CASE("ladder validation") {
  const auto m = Model::make(ModelKind::ising, 1.0);
  const auto g = TestFunction::gaussian(1.0);
  const LadderStage same_n[] = {{8.0, 64}, {10.0, 64}};
  const LadderStage shrinking[] = {{8.0, 64}, {6.0, 128}};
  CHECK_THROWS_AS(best_constant(m, PolynomialP::one(), g, same_n), Error);
  CHECK_THROWS_AS(best_constant(m, PolynomialP::one(), g, shrinking), Error);
  CHECK_THROWS_AS(best_constant(m, PolynomialP::one(), g, std::span<const LadderStage>()), Error);
  BestConstantOptions bad;
  bad.tolerance = 0.0;
  CHECK_THROWS_AS(best_constant(m, PolynomialP::one(), g, kLadder, bad), Error);
}

TEST_CASE("degenerate minimum prefers the central node") {
  auto grid = make_grid(3.0, 5);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(5, 5);
  const KernelMatrix k(id, grid, KernelProvenance{});
  const auto e = min_eigenpair(k);
  CHECK(e.degenerate);
  CHECK(e.multiplicity == 5);
  CHECK(e.value == doctest::Approx(1.0));
  CHECK(std::abs(e.vector.coefficients[2]) == doctest::Approx(1.0));
}

TEST_CASE("boundary mass") {
  const auto grid = make_grid(4.0, 8);
  StateVector v;
  v.coefficients.assign(8, C(0.0));
  v.coefficients.front() = 1.0;
  CHECK(boundary_mass(grid, v) == 1.0);
  v.coefficients.front() = 0.0;
  v.coefficients[4] = 1.0;
  CHECK(boundary_mass(grid, v) == 0.0);
}

}
