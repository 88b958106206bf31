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

#include <filesystem>
#include <utility>
#include <vector>

#include "qeilab/testfn.hpp"

namespace qei {

/// Q(u) = sqrt(1 - u^-2) - u^-2 log(u + sqrt(u^2 - 1)) for u >= 1.
double q_function(double u);

/// (u, Q(u)) on a uniform grid over [1, u_max].
std::vector<std::pair<double, double>> tabulate_q(double u_max, std::size_t count);
void write_q_csv(const std::filesystem::path& path, double u_max, std::size_t count);

struct BoundResult {
  double value = 0.0;  ///< <= 0
  double error = 0.0;
  double omega_cutoff = 0.0;
  /// g is not compactly supported, so the bound formula is applied outside
  /// its stated hypotheses.
  bool extrapolated = false;
  Convention convention = Convention::plain;
};

struct IsingBoundOptions {
  Convention convention = Convention::plain;
  /// Relative size of the discarded tail at which the cutoff stops doubling.
  double tail_tolerance = 1e-10;
  /// Initial upper cutoff; 0 picks mass + 8 / width.
  double initial_cutoff = 0.0;
  int max_doublings = 40;
};

/// -(1 / 4 pi^2) Int_mass^inf dw w^2 |g~(w)|^2 Q(w / mass).
BoundResult ising_bound(const TestFunction& g, double mass, const IsingBoundOptions& options = {});

}  // namespace qei
