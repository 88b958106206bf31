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

#include "qeilab/models.hpp"

namespace qei::detail {

// Minimal form factor of the sinh-Gordon model at coupling B in (0, 2):
//
//   log F_min(z) = Int_0^inf dx G(x) sin^2(x (i pi - z) / (2 pi)),
//   G(x) = 8 sinh(xB/4) sinh(x(2-B)/4) sinh(x/2) / (x sinh^2 x),
//
// normalized so that F_min(i pi) = 1, with
//   S_2(theta) = (sinh theta - i sin(pi B/2)) / (sinh theta + i sin(pi B/2)).
class SinhGordonSolution final : public MinimalSolution {
 public:
  explicit SinhGordonSolution(double coupling);

  std::complex<double> shifted(double theta) const override;
  std::complex<double> at(std::complex<double> zeta) const override;
  std::complex<double> s2(double theta) const override;
  Asymptote asymptote() const override { return Asymptote::finite_at(asymptote_); }

  double weight(double x) const noexcept;

 private:
  double b_;
  double asymptote_;
};

}  // namespace qei::detail
