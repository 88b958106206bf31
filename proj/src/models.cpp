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

#include "qeilab/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qeilab/error.hpp"
#include "csv.hpp"
#include "sinh_gordon.hpp"

namespace qei {
namespace {

using C = std::complex<double>;

class FreeSolution final : public MinimalSolution {
 public:
  C shifted(double) const override { return 1.0; }
  C at(C) const override { return 1.0; }
  C s2(double) const override { return 1.0; }
  Asymptote asymptote() const override { return Asymptote::finite_at(1.0); }
};

// F_min(z) = -i sinh(z/2); on the shifted line this is cosh(theta/2).
class IsingSolution final : public MinimalSolution {
 public:
  C shifted(double theta) const override { return std::cosh(0.5 * theta); }
  C at(C zeta) const override { return C(0.0, -1.0) * std::sinh(0.5 * zeta); }
  C s2(double) const override { return -1.0; }
  Asymptote asymptote() const override { return Asymptote::infinite(); }
};

Asymptote estimate_asymptote(const MinimalSolution& s) {
  const C f20 = s.shifted(20.0);
  const C f40 = s.shifted(40.0);
  if (!std::isfinite(std::abs(f40))) return Asymptote::inconclusive();
  if (std::abs(f40 - f20) > 1e-6 * std::abs(f40)) return Asymptote::inconclusive();
  return Asymptote::finite_at(f40.real());
}

class CustomSolution final : public MinimalSolution {
 public:
  explicit CustomSolution(CustomModelSpec spec) : spec_(std::move(spec)) {
    asymptote_ = spec_.asymptote ? *spec_.asymptote : estimate_asymptote(*this);
  }
  C shifted(double theta) const override { return spec_.fmin_shifted(theta); }
  C s2(double theta) const override {
    if (!spec_.s2) throw domain_error("custom model does not supply S_2");
    return spec_.s2(theta);
  }
  Asymptote asymptote() const override { return asymptote_; }

 private:
  CustomModelSpec spec_;
  Asymptote asymptote_;
};

// Cubic Hermite interpolation with centred-difference slopes.
class TableSolution final : public MinimalSolution {
 public:
  TableSolution(std::vector<double> theta, std::vector<C> values, std::optional<Asymptote> asym)
      : theta_(std::move(theta)), values_(std::move(values)) {
    if (theta_.size() < 4) throw invalid_argument("F_min table needs at least four rows");
    if (theta_.size() != values_.size()) throw invalid_argument("F_min table: size mismatch");
    h_ = theta_[1] - theta_[0];
    if (!(h_ > 0.0)) throw invalid_argument("F_min table: theta must be increasing");
    for (std::size_t i = 0; i < theta_.size(); ++i) {
      if (std::abs(theta_[i] - (theta_[0] + h_ * static_cast<double>(i))) > 1e-6 * h_)
        throw invalid_argument("F_min table: non-uniform theta spacing");
    }
    half_ = std::abs(theta_.front()) <= 1e-12 * h_;
    if (!half_ && std::abs(theta_.front() + theta_.back()) > 1e-6 * h_)
      throw invalid_argument("F_min table must start at theta = 0 or be symmetric about 0");
    asymptote_ = asym ? *asym : estimate_asymptote(*this);
  }

  double range() const { return theta_.back(); }

  C shifted(double theta) const override {
    if (half_ && theta < 0.0) return std::conj(shifted(-theta));
    if (theta < theta_.front() || theta > theta_.back()) {
      if (asymptote_.is_finite()) return asymptote_.value;
      throw domain_error("F_min table: theta outside tabulated range");
    }
    const double u = (theta - theta_.front()) / h_;
    const std::size_t n = theta_.size();
    const auto i = std::min(static_cast<std::size_t>(u), n - 2);
    const double t = u - static_cast<double>(i);
    const C m0 = slope(i);
    const C m1 = slope(i + 1);
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * values_[i] + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * values_[i + 1] + (t3 - t2) * m1;
  }
  C s2(double) const override { throw domain_error("tabulated model does not supply S_2"); }
  Asymptote asymptote() const override { return asymptote_; }

 private:
  // Slope in index units.
  C slope(std::size_t i) const {
    const std::size_t n = values_.size();
    if (i == 0) {
      if (half_) return 0.5 * (values_[1] - std::conj(values_[1]));
      return values_[1] - values_[0];
    }
    if (i + 1 == n) return values_[n - 1] - values_[n - 2];
    return 0.5 * (values_[i + 1] - values_[i - 1]);
  }

  std::vector<double> theta_;
  std::vector<C> values_;
  double h_ = 0.0;
  bool half_ = false;
  Asymptote asymptote_;
};

void check_mass(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw invalid_argument("model mass must be positive");
}

}  // namespace

C MinimalSolution::at(C zeta) const {
  if (zeta.imag() == std::numbers::pi) return shifted(zeta.real());
  throw domain_error("F_min is only available on the line Im(zeta) = pi for this model");
}

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::free: return "free";
    case ModelKind::ising: return "ising";
    case ModelKind::sinh_gordon: return "sinh_gordon";
    case ModelKind::custom: return "custom";
  }
  return "unknown";
}

ModelKind parse_model_kind(const std::string& s) {
  if (s == "free") return ModelKind::free;
  if (s == "ising") return ModelKind::ising;
  if (s == "sinh_gordon" || s == "sinh-gordon") return ModelKind::sinh_gordon;
  if (s == "custom") return ModelKind::custom;
  throw invalid_argument("unknown model kind '" + s + "'");
}

std::string to_string(Asymptote::Kind k) {
  switch (k) {
    case Asymptote::Kind::finite: return "finite";
    case Asymptote::Kind::infinite: return "infinite";
    case Asymptote::Kind::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Model Model::make(ModelKind kind, double mass, std::optional<double> coupling, std::string name) {
  check_mass(mass);
  Model m;
  m.kind_ = kind;
  m.mass_ = mass;
  switch (kind) {
    case ModelKind::free: m.data_ = std::make_shared<FreeSolution>(); break;
    case ModelKind::ising: m.data_ = std::make_shared<IsingSolution>(); break;
    case ModelKind::sinh_gordon:
      if (!coupling) throw invalid_argument("sinh_gordon requires a coupling B in (0, 2)");
      m.coupling_ = coupling;
      m.data_ = std::make_shared<detail::SinhGordonSolution>(*coupling);
      break;
    case ModelKind::custom:
      throw invalid_argument("custom models are registered with Model::custom or from_table");
  }
  if (name.empty()) {
    name = to_string(kind);
    if (coupling && kind == ModelKind::sinh_gordon) {
      std::ostringstream os;
      os << name << "(B=" << *coupling << ")";
      name = os.str();
    }
  }
  m.name_ = std::move(name);
  return m;
}

Model Model::custom(std::string name, double mass, CustomModelSpec spec) {
  check_mass(mass);
  if (!spec.fmin_shifted) throw invalid_argument("custom model needs an F_min evaluator");
  if (name.empty()) name = "custom";
  const double range = spec.check_range;
  Model m;
  m.name_ = std::move(name);
  m.kind_ = ModelKind::custom;
  m.mass_ = mass;
  m.data_ = std::make_shared<CustomSolution>(std::move(spec));
  m.check_invariants(range);
  return m;
}

Model Model::from_table(std::string name, double mass, std::vector<double> theta,
                        std::vector<C> values, std::optional<Asymptote> asymptote) {
  check_mass(mass);
  if (name.empty()) name = "custom";
  auto table = std::make_shared<TableSolution>(std::move(theta), std::move(values), asymptote);
  const double range = table->range();
  Model m;
  m.name_ = std::move(name);
  m.kind_ = ModelKind::custom;
  m.mass_ = mass;
  m.data_ = std::move(table);
  m.check_invariants(range);
  return m;
}

Model Model::from_table_csv(std::string name, double mass, const std::filesystem::path& path,
                            std::optional<Asymptote> asymptote) {
  const auto rows = detail::read_numeric_csv(path, 3);
  std::vector<double> theta;
  std::vector<C> values;
  for (const auto& r : rows) {
    theta.push_back(r[0]);
    values.emplace_back(r[1], r[2]);
  }
  return from_table(std::move(name), mass, std::move(theta), std::move(values), asymptote);
}

// Normalization F_min(i pi) = 1 and F_min(-theta + i pi) = conj F_min(theta + i pi)
// on 1000 points of [-range, range].
void Model::check_invariants(double range) const {
  const C f0 = data_->shifted(0.0);
  if (std::abs(f0 - 1.0) > 1e-8)
    throw invalid_argument("model '" + name_ + "': F_min(i pi) must equal 1");
  constexpr int kSamples = 1000;
  for (int i = 0; i < kSamples; ++i) {
    const double theta = range * (2.0 * i / (kSamples - 1) - 1.0);
    const C a = data_->shifted(theta);
    const C b = data_->shifted(-theta);
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw invalid_argument("model '" + name_ + "': non-finite F_min sample");
    if (std::abs(b - std::conj(a)) > 1e-10 * std::max(1.0, std::abs(a)))
      throw invalid_argument("model '" + name_ +
                             "': F_min(-theta + i pi) != conj F_min(theta + i pi)");
  }
  const auto asym = data_->asymptote();
  if (asym.is_finite() && !(std::isfinite(asym.value) && asym.value > 0.0))
    throw invalid_argument("model '" + name_ + "': declared asymptote must be positive");
}

}  // namespace qei
