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

#include "doctest.h"
#include "qeilab/criteria.hpp"
#include "qeilab/error.hpp"

using namespace qei;

namespace {

Model free_model() { return Model::make(ModelKind::free, 1.0); }
Model ising_model() { return Model::make(ModelKind::ising, 1.0); }
Model sinh_gordon() { return Model::make(ModelKind::sinh_gordon, 1.0, 1.0); }

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("admissible alpha window") {
  CHECK(admissible_alpha_bound(free_model()).value() == 0.5);
  CHECK_FALSE(admissible_alpha_bound(ising_model()).has_value());
  const auto sg = sinh_gordon();
  CHECK(admissible_alpha_bound(sg).value() ==
        doctest::Approx(1.0 / (2.0 * sg.asymptote().value)).epsilon(1e-14));
  CustomModelSpec spec;
  spec.fmin_shifted = [](double t) { return std::complex<double>(1.0 + 0.1 * std::sin(t) * std::sin(t)); };
  CHECK_THROWS_AS(admissible_alpha_bound(Model::custom("wobbly", 1.0, spec)), Error);
}

TEST_CASE("negativity scan") {
  const auto w = negativity_scan(ising_model(), PolynomialP::one());
  REQUIRE(w.has_value());
  CHECK(w->theta > 0.0);
  CHECK(w->magnitude > 1.0);
  CHECK_FALSE(negativity_scan(free_model(), PolynomialP::one()).has_value());
  const auto lin = negativity_scan(free_model(), PolynomialP::linear(0.4));
  REQUIRE(lin.has_value());
  CHECK(lin->theta <= 1.0);
  // 1.3 - 0.3 cosh(theta) falls below -1 once cosh(theta) > 23/3.
  const auto neg = negativity_scan(free_model(), PolynomialP::linear(-0.3));
  REQUIRE(neg.has_value());
  CHECK(std::cosh(neg->theta) > 23.0 / 3.0);
  CHECK_FALSE(negativity_scan(free_model(), PolynomialP::linear(-0.3), ScanOptions{2.5, 401, 1e-9}).has_value());
  CHECK(negativity_scan(sinh_gordon(), PolynomialP::one()).has_value());
}

TEST_CASE("scan soundness") {
  const Model models[] = {free_model(), ising_model(), sinh_gordon()};
  const PolynomialP polys[] = {PolynomialP::one(), PolynomialP::linear(0.4),
                               PolynomialP::linear(-0.2), PolynomialP::from_coefficients({0.5, 0.0, 0.5})};
  for (const auto& m : models)
    for (const auto& p : polys)
      if (const auto w = negativity_scan(m, p)) CHECK(std::abs(f_p(m, p, w->theta)) > 1.0);
}

TEST_CASE("scan profile") {
  const auto prof = scan_profile(ising_model(), PolynomialP::one(), 10.0, 11);
  REQUIRE(prof.size() == 11);
  CHECK(prof.front().first == 0.0);
  CHECK(prof.back().first == 10.0);
  CHECK(prof[4].second == doctest::Approx(std::cosh(2.0)).epsilon(1e-15));
  ScanOptions bad;
  bad.samples = 1;
  CHECK_THROWS_AS(negativity_scan(ising_model(), PolynomialP::one(), bad), Error);
}

TEST_CASE("verdict table") {
  CHECK(classify_qei(ising_model(), PolynomialP::one()).verdict == Verdict::holds);
  const auto x = PolynomialP::from_coefficients({0.0, 1.0});
  const auto ix = classify_qei(ising_model(), x);
  CHECK(ix.verdict == Verdict::no_go);
  CHECK(ix.divergent);
  CHECK(classify_qei(ising_model(), PolynomialP::linear(-0.3)).verdict == Verdict::no_go);

  const auto sq = classify_degree(free_model(), PolynomialP::from_coefficients({0.0, 0.0, 1.0}));
  CHECK(sq.verdict == Verdict::no_go);
  CHECK(sq.by_degree);
  const auto cubic = classify_degree(sinh_gordon(), PolynomialP::from_coefficients({0.7, 0.0, 0.0, 0.3}));
  CHECK(cubic.verdict == Verdict::no_go);
  CHECK(cubic.by_degree);
  CHECK_FALSE(classify_degree(free_model(), PolynomialP::linear(0.2)).by_degree);
  CHECK_THROWS_AS(classify_degree(ising_model(), PolynomialP::one()), Error);

  CHECK(classify_qei(free_model(), PolynomialP::linear(0.6)).verdict == Verdict::no_go);
  CHECK(classify_qei(free_model(), PolynomialP::linear(0.49)).verdict == Verdict::inconclusive);
  ClassifyOptions tight;
  tight.margin = 0.005;
  const auto edge = classify_qei(free_model(), PolynomialP::linear(0.49), tight);
  CHECK(edge.verdict == Verdict::holds);
  CHECK(edge.c == doctest::Approx(0.49).epsilon(1e-3));
  CHECK(classify_qei(sinh_gordon(), PolynomialP::linear(0.3)).verdict == Verdict::holds);
}

TEST_CASE("linear family sweep") {
  for (int i = -9; i <= 9; ++i) {
    const double alpha = 0.05 * i;
    const auto v = classify_qei(free_model(), PolynomialP::linear(alpha));
    CHECK(v.verdict == Verdict::holds);
    CHECK(std::abs(v.c - std::abs(alpha)) < 1e-3);
  }
}

TEST_CASE("mutual exclusion with the tail ratio") {
  const Model models[] = {free_model(), ising_model(), sinh_gordon()};
  for (const auto& m : models) {
    for (double alpha : {-0.7, -0.45, 0.0, 0.3, 0.52, 0.8}) {
      const auto p = PolynomialP::linear(alpha);
      const ClassifyOptions opts;
      const auto v = classify_qei(m, p, opts);
      if (v.verdict != Verdict::holds) continue;
      for (const auto& [t, mag] : scan_profile(m, p, opts.theta_max, opts.samples))
        if (t >= opts.theta_max / 2.0) CHECK(mag / std::cosh(t) <= 0.5 + opts.margin);
    }
  }
}

TEST_CASE("classification bundle") {
  const auto c = classify(free_model(), PolynomialP::linear(0.3));
  CHECK(c.verdict.verdict == Verdict::holds);
  CHECK(c.alpha_bound.value() == 0.5);
  CHECK(c.alpha_admissible.value());
  const auto i = classify(ising_model(), PolynomialP::one());
  CHECK(i.verdict.verdict == Verdict::holds);
  CHECK(i.asymptote.kind == Asymptote::Kind::infinite);
  CHECK(to_string(Verdict::no_go) == "NoGo");
}

TEST_CASE("witness states have negative energy") {
  const LadderStage ladder[] = {{8.0, 256}, {12.0, 512}};
  for (const auto& p : {PolynomialP::one(), PolynomialP::linear(0.4)}) {
    const auto m = p.degree() == 0 ? ising_model() : free_model();
    auto w = negativity_scan(m, p);
    REQUIRE(w.has_value());
    bool negative = false;
    for (double s : {0.5, 1.0, 2.0}) {
      const auto b = best_constant(m, p, TestFunction::gaussian(s), ladder);
      if (b.lambda_min < 0.0 && attach_witness(*w, b)) negative = true;
    }
    CHECK(negative);
    CHECK(w->energy.value() < 0.0);
    CHECK(w->state->size() == w->grid->size());
  }
}

}
