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
#include <span>
#include <string>
#include <vector>

#include "qeilab/kernel.hpp"

namespace qei {

enum class GridKind { gauss_legendre, composite };

std::string to_string(GridKind k);
GridKind parse_grid_kind(const std::string& s);

/// Node placement. `composite` puts `core_fraction` of the nodes on a
/// Gauss–Legendre panel over [-core_cutoff, core_cutoff] and splits the rest
/// between two outer panels; it falls back to a single panel when the cutoff
/// is not larger than 1.25 * core_cutoff.
struct GridOptions {
  GridKind kind = GridKind::composite;
  double core_cutoff = 4.0;
  double core_fraction = 0.75;
};

/// Gauss–Legendre nodes and weights mapped to [-cutoff, cutoff].
RapidityGrid make_grid(double cutoff, std::size_t n);
RapidityGrid make_grid(double cutoff, std::size_t n, const GridOptions& options);

struct EigenPair {
  double value = 0.0;      ///< Rayleigh quotient of `vector`
  StateVector vector;      ///< unit norm
  double residual = 0.0;   ///< ||M v - value v||
  double raw_value = 0.0;  ///< dense eigensolver output before refinement
  int refinement_steps = 0;
  bool degenerate = false;
  std::size_t multiplicity = 1;
};

/// Smallest eigenvalue and a unit eigenvector of the kernel matrix.
///
/// The dense solve is followed by a Newton refinement of the lowest pair with
/// residuals accumulated in long double. The diagonal of the kernel grows like
/// cosh^2(theta), so the dense solver alone is only accurate to eps * ||M||,
/// which at moderate cutoffs exceeds |lambda_min|.
EigenPair min_eigenpair(const KernelMatrix& k);

struct LadderStage {
  double cutoff = 8.0;
  std::size_t n = 256;
};

struct LadderEntry {
  double cutoff = 0.0;
  std::size_t n = 0;
  double lambda = 0.0;
  double boundary_mass = 0.0;
  double hermiticity_defect = 0.0;
  double norm = 0.0;
  bool extension = false;  ///< added because the witness touched the cutoff
};

struct BestConstantOptions {
  double tolerance = 1e-6;
  GridOptions grid{};
  Convention convention = Convention::plain;
  double boundary_mass_limit = 1e-8;
  double cutoff_step = 4.0;
  int max_cutoff_extensions = 3;
};

struct ConvergedBound {
  double lambda_min = 0.0;
  StateVector witness;
  RapidityGrid grid;  ///< grid of the final stage
  std::vector<LadderEntry> ladder;
  double error_estimate = 0.0;  ///< |lambda_last - lambda_previous|; infinity for one stage
  bool converged = false;
  bool degenerate = false;
  double residual = 0.0;

  /// Witness as function values phi(theta_i) at the final grid nodes.
  std::vector<std::complex<double>> witness_function() const {
    return witness.function_values(grid);
  }
};

/// Runs assemble + min_eigenpair along a refining ladder of (cutoff, n).
ConvergedBound best_constant(const Model& m, const PolynomialP& p, const TestFunction& g,
                             std::span<const LadderStage> ladder,
                             const BestConstantOptions& options = {});

/// Probability mass of `phi` on nodes with |theta| > cutoff - 1.
double boundary_mass(const RapidityGrid& grid, const StateVector& phi);

}  // namespace qei
