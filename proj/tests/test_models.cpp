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
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qeilab/error.hpp"
#include "qeilab/models.hpp"
#include "reference.hpp"

using qei::Model;
using qei::ModelKind;
using C = std::complex<double>;

namespace {

Model sinh_gordon() { return Model::make(ModelKind::sinh_gordon, 1.0, 1.0); }

double rel(C a, C b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST_SUITE("models") {

TEST_CASE("free and ising closed forms") {
  const auto free = Model::make(ModelKind::free, 1.0);
  const auto ising = Model::make(ModelKind::ising, 1.0);
  for (double t : {-3.0, 0.0, 0.4, 37.5}) CHECK(free.fmin_shifted(t) == C(1.0));
  CHECK(ising.fmin_shifted(0.0) == C(1.0));
  CHECK(ising.fmin_shifted(2.0).real() == doctest::Approx(1.5430806348152437).epsilon(1e-15));
  CHECK(std::abs(ising.fmin(C(0.0, ref::pi)) - 1.0) < 1e-15);
  for (double t : {0.3, 5.0, 11.0}) CHECK(ising.fmin_shifted(t) == ising.fmin_shifted(-t));
  for (double t : {0.0, 1.0, -2.0}) {
    CHECK(ising.s2(t) == C(-1.0));
    CHECK(free.s2(t) == C(1.0));
  }
}

TEST_CASE("asymptotes") {
  CHECK(Model::make(ModelKind::free, 1.0).asymptote().value == 1.0);
  CHECK(Model::make(ModelKind::ising, 2.0).asymptote().kind == qei::Asymptote::Kind::infinite);
  const auto sg = sinh_gordon();
  const auto a = sg.asymptote();
  REQUIRE(a.is_finite());
  CHECK(a.value > 0.0);
  CHECK(std::abs(sg.fmin_shifted(40.0).real() - a.value) < 1e-5 * a.value);
}

TEST_CASE("sinh-Gordon frozen values") {
  const auto sg = sinh_gordon();
  for (const auto& s : ref::sinh_gordon_shifted) {
    const auto v = sg.fmin_shifted(s.x);
    CHECK(std::abs(v.real() - s.value) < 1e-12 * s.value);
    CHECK(std::abs(v.imag()) < 1e-12);
  }
  for (const auto& s : ref::sinh_gordon_fmin) CHECK(rel(sg.fmin(s.z), s.value) < 1e-11);
  CHECK(std::abs(sg.s2(0.0) + 1.0) < 1e-15);
  CHECK_THROWS_AS(Model::make(ModelKind::sinh_gordon, 1.0), qei::Error);
  CHECK_THROWS_AS(Model::make(ModelKind::sinh_gordon, 1.0, 2.0), qei::Error);
}

TEST_CASE("Watson relation on the real line") {
  const auto ising = Model::make(ModelKind::ising, 1.0);
  const auto sg = sinh_gordon();
  for (int i = -20; i <= 20; ++i) {
    const double t = 0.25 * i;
    CHECK(ising.fmin(C(t, 0.0)) == ising.s2(t) * ising.fmin(C(-t, 0.0)));
    if (t != 0.0) CHECK(rel(sg.fmin(C(t, 0.0)), sg.s2(t) * sg.fmin(C(-t, 0.0))) < 1e-8);
  }
}

TEST_CASE("conjugation symmetry on 1000 points") {
  const Model models[] = {Model::make(ModelKind::free, 1.0), Model::make(ModelKind::ising, 1.0),
                          sinh_gordon(), Model::make(ModelKind::sinh_gordon, 1.0, 0.4)};
  for (const auto& m : models) {
    for (int i = 0; i < 1000; ++i) {
      const double t = -20.0 + 40.0 * i / 999.0;
      const auto a = m.fmin_shifted(t);
      const auto b = m.fmin_shifted(-t);
      if (m.kind() == ModelKind::sinh_gordon)
        CHECK(std::abs(b - std::conj(a)) <= 1e-10 * std::abs(a));
      else
        CHECK(b == std::conj(a));
    }
  }
}

TEST_CASE("custom models") {
  qei::CustomModelSpec spec;
  spec.fmin_shifted = [](double t) { return C(1.0 + 0.2 * std::tanh(t * t), 0.0); };
  spec.asymptote = qei::Asymptote::finite_at(1.2);
  const auto m = Model::custom("plateau", 1.0, spec);
  CHECK(m.kind() == ModelKind::custom);
  CHECK(m.name() == "plateau");
  CHECK(m.asymptote().value == 1.2);

  qei::CustomModelSpec estimated;
  estimated.fmin_shifted = spec.fmin_shifted;
  CHECK(Model::custom("est", 1.0, estimated).asymptote().value == doctest::Approx(1.2));

  qei::CustomModelSpec unnormalized;
  unnormalized.fmin_shifted = [](double) { return C(2.0, 0.0); };
  CHECK_THROWS_AS(Model::custom("bad", 1.0, unnormalized), qei::Error);

  qei::CustomModelSpec asymmetric;
  asymmetric.fmin_shifted = [](double t) { return C(1.0, 0.1 * t * t); };
  CHECK_THROWS_AS(Model::custom("bad", 1.0, asymmetric), qei::Error);
}

TEST_CASE("table models") {
  std::vector<double> theta;
  std::vector<C> values;
  for (int i = 0; i <= 200; ++i) {
    theta.push_back(0.1 * i);
    values.emplace_back(std::cosh(0.05 * i), 0.0);
  }
  const auto m = Model::from_table("tab", 1.0, theta, values, qei::Asymptote::infinite());
  CHECK(m.fmin_shifted(1.0).real() == doctest::Approx(std::cosh(0.5)).epsilon(1e-12));
  CHECK(m.fmin_shifted(-1.0) == m.fmin_shifted(1.0));

  const auto path = std::filesystem::temp_directory_path() / "qeilab_test_fmin.csv";
  {
    std::ofstream out(path);
    out.precision(17);
    out << "theta,re,im\n";
    for (std::size_t i = 0; i < theta.size(); ++i) out << theta[i] << ',' << values[i].real() << ",0\n";
  }
  const auto csv = Model::from_table_csv("tab", 1.0, path, qei::Asymptote::infinite());
  CHECK(csv.fmin_shifted(0.75) == m.fmin_shifted(0.75));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(Model::from_table_csv("tab", 1.0, path, std::nullopt), qei::Error);
}

TEST_CASE("invalid arguments") {
  CHECK_THROWS_AS(Model::make(ModelKind::free, 0.0), qei::Error);
  CHECK_THROWS_AS(Model::make(ModelKind::free, -1.0), qei::Error);
  CHECK_THROWS_AS(qei::parse_model_kind("potts"), qei::Error);
  CHECK(qei::parse_model_kind("sinh-gordon") == ModelKind::sinh_gordon);
}

}
