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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits non-zero
// when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qeilab/criteria.hpp"
#include "qeilab/isingbound.hpp"
#include "qeilab/optimizer.hpp"
#include "reference.hpp"

using namespace qei;
using C = std::complex<double>;

namespace {

constexpr double kSigmas[] = {0.5, 1.0, 2.0};
const LadderStage kLadder[] = {{8.0, 256}, {12.0, 512}};

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Case {
  std::string label;
  Model model;
  PolynomialP poly;
  double sigma;
  ConvergedBound result;
};

std::vector<Case> run_cases() {
  const auto free = Model::make(ModelKind::free, 1.0);
  const auto ising = Model::make(ModelKind::ising, 1.0);
  std::vector<Case> cases;
  for (double s : kSigmas) {
    cases.push_back({"free P=1", free, PolynomialP::one(), s, {}});
    cases.push_back({"ising P=1", ising, PolynomialP::one(), s, {}});
    cases.push_back({"free alpha=0.4", free, PolynomialP::linear(0.4), s, {}});
  }
  for (auto& c : cases) c.result = best_constant(c.model, c.poly, TestFunction::gaussian(c.sigma), kLadder);
  return cases;
}

void a1(const std::vector<Case>& cases) {
  bool ok = true;
  double worst = 0.0;
  for (const auto& c : cases) {
    if (c.label != "free P=1") continue;
    const auto& e = c.result.ladder.front();
    ok = ok && e.lambda >= -1e-8 * e.norm;
    worst = std::min(worst, e.lambda / e.norm);
    const auto k = assemble(c.model, c.poly, TestFunction::gaussian(c.sigma), make_grid(8.0, 256));
    const double plain = min_eigenpair(k).value;
    ok = ok && plain >= -1e-8 * k.norm();
    worst = std::min(worst, plain / k.norm());
  }
  report("A1", ok, "free P=1, sigma in {0.5,1,2}, n=256 Theta=8: min lambda/||M|| = " + fmt("%.3g", worst));
}

void a2(const std::vector<Case>& cases) {
  const auto free = Model::make(ModelKind::free, 1.0);
  const auto ising = Model::make(ModelKind::ising, 1.0);
  const auto wi = negativity_scan(ising, PolynomialP::one());
  const auto wf = negativity_scan(free, PolynomialP::linear(0.4));
  const auto none = negativity_scan(free, PolynomialP::one());
  auto negative = [&](const std::string& label) {
    return std::any_of(cases.begin(), cases.end(), [&](const Case& c) {
      return c.label == label && c.result.lambda_min < 0.0;
    });
  };
  const bool ok = wi && wf && !none && negative("ising P=1") && negative("free alpha=0.4");
  std::string d = "witness ising theta_P=" + (wi ? fmt("%.4g", wi->theta) : std::string("none")) +
                  ", free alpha=0.4 theta_P=" + (wf ? fmt("%.4g", wf->theta) : std::string("none")) +
                  ", free P=1 " + (none ? "witness" : "none") + "; negative lambda found for both witness cases";
  report("A2", ok, d);
}

void a3() {
  const auto free = Model::make(ModelKind::free, 1.0);
  const auto ising = Model::make(ModelKind::ising, 1.0);
  const auto sg = Model::make(ModelKind::sinh_gordon, 1.0, 1.0);
  bool ok = classify(ising, PolynomialP::one()).verdict.verdict == Verdict::holds;
  for (const auto& p : {PolynomialP::from_coefficients({0.0, 1.0}), PolynomialP::linear(0.3),
                        PolynomialP::linear(-0.3), PolynomialP::from_coefficients({0.5, 0.0, 0.5})})
    ok = ok && classify(ising, p).verdict.verdict == Verdict::no_go;
  for (const auto& p : {PolynomialP::from_coefficients({0.0, 0.0, 1.0}),
                        PolynomialP::from_coefficients({0.7, 0.0, 0.0, 0.3})}) {
    ok = ok && classify(free, p).verdict.verdict == Verdict::no_go;
    ok = ok && classify(sg, p).verdict.verdict == Verdict::no_go;
  }
  double worst = 0.0;
  for (int i = -9; i <= 9; ++i) {
    const double alpha = 0.05 * i;
    const auto v = classify(free, PolynomialP::linear(alpha)).verdict;
    ok = ok && v.verdict == Verdict::holds;
    worst = std::max(worst, std::abs(v.c - std::abs(alpha)));
  }
  ok = ok && worst < 1e-3;
  report("A3", ok, "verdict table reproduced; free |alpha|<=0.45 max |c-|alpha|| = " + fmt("%.2e", worst));
}

int run_cli(const std::string& args, std::string& out) {
  FILE* pipe = popen((std::string(QEILAB_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return -1;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void a4(const std::vector<Case>& cases) {
  bool ok = true;
  std::ostringstream d;
  d << "plain convention:";
  for (const auto& c : cases) {
    if (c.label != "ising P=1") continue;
    const double b = ising_bound(TestFunction::gaussian(c.sigma), 1.0).value;
    const double l = c.result.lambda_min;
    ok = ok && l >= b - 1e-6 * std::abs(b);
    d << " sigma=" << c.sigma << " lambda=" << fmt("%.4g", l) << " >= bound=" << fmt("%.4g", b) << ";";
  }
  const auto dir = std::filesystem::temp_directory_path() / "qeilab_acceptance_verify";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "config.json") << R"({"model": {"kind": "ising"}})";
  std::string out;
  const int code = run_cli("verify --config " + (dir / "config.json").string() + " --out " +
                               (dir / "out").string(), out);
  bool verify_ok = false;
  try {
    const auto j = nlohmann::json::parse(out);
    verify_ok = code == 0 && j.at("pass").get<bool>();
    d << " verify satisfied by " << j.at("satisfying_conventions").dump();
  } catch (const std::exception&) {
    d << " verify output unreadable";
  }
  report("A4", ok && verify_ok, d.str());
}

void a5() {
  bool ok = q_function(1.0) == 0.0;
  const double q2 = q_function(2.0);
  ok = ok && std::abs(q2 - ref::q_at_2) <= 1e-5;
  double prev = 0.0;
  double max_drop = 0.0;
  bool bounded = true;
  for (int i = 0; i < 10000; ++i) {
    const double u = 1.0 + 1e-6 * std::pow(1e8, i / 9999.0);
    const double q = q_function(u);
    bounded = bounded && q >= 0.0 && q <= 1.0;
    if (i > 0) max_drop = std::max(max_drop, prev - q);
    prev = q;
  }
  ok = ok && bounded && max_drop <= 1e-10;
  report("A5", ok,
         "Q(1)=0, Q(2)=" + fmt("%.10f", q2) + " (high-precision oracle 0.5367859296; the rounded figure 0.53674 is off by " +
             fmt("%.1e", std::abs(q2 - 0.53674)) + "), monotone and in [0,1] on 1e4 samples");
}

void a6() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> centre(-1.0, 1.0), width(0.3, 0.6), wave(-2.0, 2.0);
  std::normal_distribution<double> amp;
  const auto grid = make_grid(4.0, 64);
  const auto g = TestFunction::gaussian(1.0);
  double worst = 0.0;
  for (bool ising : {false, true}) {
    const auto m = Model::make(ising ? ModelKind::ising : ModelKind::free, 1.0);
    const auto k = assemble(m, PolynomialP::one(), g, grid);
    for (int trial = 0; trial < 5; ++trial) {
      std::array<double, 3> c{}, w{}, q{};
      std::array<C, 3> a{};
      for (int i = 0; i < 3; ++i) {
        c[i] = centre(rng);
        w[i] = width(rng);
        q[i] = wave(rng);
        a[i] = C(amp(rng), amp(rng));
      }
      auto phi = [&](double t) {
        C s = 0.0;
        for (int i = 0; i < 3; ++i)
          s += a[i] * std::exp(C(-(t - c[i]) * (t - c[i]) / (2.0 * w[i] * w[i]), q[i] * t));
        return s;
      };
      const double direct = ref::energy_2d(ising, 1.0, phi, -6.0, 6.0);
      const double matrix = quadratic_form(k, StateVector::sample(grid, phi));
      worst = std::max(worst, std::abs(matrix - direct) / std::abs(direct));
    }
  }
  report("A6", worst < 1e-6, "5 random states x {free, ising}, n=64 grid vs 2D adaptive quadrature: max rel diff " +
                                 fmt("%.2e", worst));
}

void a7(const std::vector<Case>& cases) {
  bool ok = true;
  double defect = 0.0;
  std::ostringstream d;
  d << "change (8,256)->(12,512) relative to max(|lambda|, 1e-8 ||M||):";
  for (const auto& c : cases) {
    const auto& l = c.result.ladder;
    for (const auto& e : l) defect = std::max(defect, e.hermiticity_defect);
    const double a = l.front().lambda;
    const double b = l.back().lambda;
    const double change = std::abs(b - a);
    const double scale = std::max(std::abs(b), 1e-8 * l.back().norm);
    const double strict = b != 0.0 ? change / std::abs(b) : 0.0;
    ok = ok && change < 1e-5 * scale;
    d << " [" << c.label << " s=" << c.sigma << ": " << fmt("%.1e", change / scale) << " strict "
      << (b != 0.0 ? fmt("%.1e", strict) : std::string("n/a")) << "]";
  }
  d << "; max Hermiticity defect " << fmt("%.1e", defect);
  report("A7", ok && defect < 1e-10, d.str());
}

void a8() {
  const auto ising = Model::make(ModelKind::ising, 1.0);
  const auto g = TestFunction::gaussian(1.0);
  const auto grid = make_grid(8.0, 256, GridOptions{});
  const double l1 = min_eigenpair(assemble(ising, PolynomialP::one(), g, grid)).value;
  const double b1 = ising_bound(g, 1.0).value;
  double worst = 0.0;
  for (double s : {0.5, 3.0, 10.0}) {
    const double ls = min_eigenpair(assemble(ising, PolynomialP::one(), g.scaled(s), grid)).value;
    const double bs = ising_bound(g.scaled(s), 1.0).value;
    worst = std::max(worst, std::abs(ls - s * s * l1) / std::abs(s * s * l1));
    worst = std::max(worst, std::abs(bs - s * s * b1) / std::abs(s * s * b1));
  }
  report("A8", worst < 1e-12, "s in {0.5,3,10}: max rel deviation from s^2 scaling " + fmt("%.1e", worst));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto cases = run_cases();
    a1(cases);
    a2(cases);
    a3();
    a4(cases);
    a5();
    a6();
    a7(cases);
    a8();
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 8 criteria failed (%.1f s)\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
