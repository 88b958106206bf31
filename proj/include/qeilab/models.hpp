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
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qei {

enum class ModelKind { free, ising, sinh_gordon, custom };

std::string to_string(ModelKind k);
ModelKind parse_model_kind(const std::string& s);

/// Limit of F_min(theta + i pi) as theta -> infinity. `infinite` is a tag,
/// `value` is meaningful only for `finite`.
struct Asymptote {
  enum class Kind { finite, infinite, inconclusive };
  Kind kind = Kind::finite;
  double value = 0.0;

  static Asymptote finite_at(double v) { return {Kind::finite, v}; }
  static Asymptote infinite() { return {Kind::infinite, 0.0}; }
  static Asymptote inconclusive() { return {Kind::inconclusive, 0.0}; }
  bool is_finite() const noexcept { return kind == Kind::finite; }
};

std::string to_string(Asymptote::Kind k);

/// Plug-in data for a custom model. `fmin_shifted` evaluates F_min(theta + i pi)
/// and must be pure. `s2` is optional. When `asymptote` is empty the limit is
/// estimated from evaluations at theta = 10, 20, 40.
struct CustomModelSpec {
  std::function<std::complex<double>(double)> fmin_shifted;
  std::function<std::complex<double>(double)> s2;
  std::optional<Asymptote> asymptote;
  /// Half-width of the theta range sampled by the registration checks.
  double check_range = 20.0;
};

/// Model-specific minimal form factor data. Implementations are immutable.
class MinimalSolution {
 public:
  virtual ~MinimalSolution() = default;
  virtual std::complex<double> shifted(double theta) const = 0;
  /// F_min at a general complex rapidity; throws when unsupported.
  virtual std::complex<double> at(std::complex<double> zeta) const;
  virtual std::complex<double> s2(double theta) const = 0;
  virtual Asymptote asymptote() const = 0;
};

/// An integrable model with one species of scalar bosons.
class Model {
 public:
  /// Built-in models. `coupling` is required for sinh_gordon and must lie in (0, 2).
  static Model make(ModelKind kind, double mass, std::optional<double> coupling = std::nullopt,
                    std::string name = {});
  /// Custom model; invariants are checked by sampling before it is returned.
  static Model custom(std::string name, double mass, CustomModelSpec spec);
  /// Custom model from a table of F_min(theta + i pi) on a uniform theta grid.
  /// The table either starts at theta = 0 (negative theta by conjugation) or
  /// covers a symmetric range. Outside the table the finite asymptote is used.
  static Model from_table(std::string name, double mass, std::vector<double> theta,
                          std::vector<std::complex<double>> values,
                          std::optional<Asymptote> asymptote);
  /// CSV with columns theta, Re, Im.
  static Model from_table_csv(std::string name, double mass, const std::filesystem::path& path,
                              std::optional<Asymptote> asymptote);

  const std::string& name() const noexcept { return name_; }
  ModelKind kind() const noexcept { return kind_; }
  double mass() const noexcept { return mass_; }
  std::optional<double> coupling() const noexcept { return coupling_; }

  /// F_min(theta + i pi).
  std::complex<double> fmin_shifted(double theta) const { return data_->shifted(theta); }
  /// F_min(zeta); for built-in models valid on 0 <= Im zeta <= 2 pi.
  std::complex<double> fmin(std::complex<double> zeta) const { return data_->at(zeta); }
  std::complex<double> s2(double theta) const { return data_->s2(theta); }
  Asymptote asymptote() const { return data_->asymptote(); }

 private:
  Model() = default;
  void check_invariants(double range) const;

  std::string name_;
  ModelKind kind_ = ModelKind::free;
  double mass_ = 1.0;
  std::optional<double> coupling_;
  std::shared_ptr<const MinimalSolution> data_;
};

inline std::complex<double> fmin_shifted(const Model& m, double theta) {
  return m.fmin_shifted(theta);
}
inline Asymptote fmin_asymptote(const Model& m) { return m.asymptote(); }
inline std::complex<double> s2(const Model& m, double theta) { return m.s2(theta); }

}  // namespace qei
