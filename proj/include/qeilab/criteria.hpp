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

#include <optional>
#include <string>
#include <vector>

#include "qeilab/kernel.hpp"
#include "qeilab/models.hpp"
#include "qeilab/optimizer.hpp"

namespace qei {

/// 1 / (2 F_min(inf + i pi)) for models with a finite asymptote; empty when
/// the asymptote is infinite (only P = 1 is admissible). Throws a domain
/// error when the asymptote is inconclusive.
std::optional<double> admissible_alpha_bound(const Model& m);

struct ScanOptions {
  double theta_max = 40.0;
  std::size_t samples = 4001;
  double epsilon = 1e-9;
};

struct NegativityWitness {
  double theta = 0.0;      ///< theta_P
  double magnitude = 0.0;  ///< |F_P(theta_P)| > 1
  /// Minimizing eigenvector with negative energy, when attached.
  std::optional<StateVector> state;
  std::optional<RapidityGrid> grid;
  std::optional<double> energy;
};

/// First theta in a uniform scan of [0, theta_max] with |F_P| > 1 + epsilon,
/// refined by golden-section maximization inside the neighbouring bracket.
std::optional<NegativityWitness> negativity_scan(const Model& m, const PolynomialP& p,
                                                 const ScanOptions& options = {});

/// Attaches the optimizer's minimizer when its eigenvalue is negative.
/// Returns whether a state was attached.
bool attach_witness(NegativityWitness& w, const ConvergedBound& bound);

/// |F_P(theta)| on the uniform scan grid, as (theta, |F_P|) pairs.
std::vector<std::pair<double, double>> scan_profile(const Model& m, const PolynomialP& p,
                                                    double theta_max, std::size_t samples);

enum class Verdict { holds, no_go, inconclusive };

std::string to_string(Verdict v);

struct QEIVerdict {
  Verdict verdict = Verdict::inconclusive;
  double c = 0.0;  ///< extrapolated tail ratio |F_P| / cosh; last sample when divergent
  bool divergent = false;
  bool by_degree = false;  ///< decided by the deg P >= 2 shortcut
  double theta_max = 40.0;
  double margin = 0.01;
  double pointwise_sup_ratio = 0.0;  ///< sup over the scan of |F_P| / cosh
  double real_part_ratio = 0.0;      ///< Re F_P / cosh at theta_max
  std::string reason;
};

struct ClassifyOptions {
  double theta_max = 40.0;
  double margin = 0.01;
  std::size_t samples = 4001;
};

/// Growth classification of |F_P(theta)| / cosh(theta) on [theta_max/2, theta_max].
QEIVerdict classify_qei(const Model& m, const PolynomialP& p, const ClassifyOptions& options = {});

/// deg P >= 2 gives NoGo at once; otherwise defers to classify_qei. Requires a
/// finite asymptote.
QEIVerdict classify_degree(const Model& m, const PolynomialP& p,
                           const ClassifyOptions& options = {});

struct Classification {
  QEIVerdict verdict;
  Asymptote asymptote;
  std::optional<double> alpha_bound;
  /// Linear coefficient of P lies inside the admissible window (degree <= 1 only).
  std::optional<bool> alpha_admissible;
};

/// classify_degree for finite asymptotes, classify_qei otherwise, plus the
/// admissible alpha window.
Classification classify(const Model& m, const PolynomialP& p, const ClassifyOptions& options = {});

}  // namespace qei
