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

#include "qeilab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qeilab/error.hpp"
#include "quadrature.hpp"

namespace qei {
namespace {

struct Sample {
  double theta;
  long double ratio;  // |F_P| / cosh, overflow-safe for high degree
  double magnitude;   // |F_P|, may be inf
  double real_ratio;
};

Sample sample(const Model& m, const PolynomialP& p, double theta) {
  const long double x = std::cosh(static_cast<long double>(theta));
  long double px = 0.0L;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) px = px * x + static_cast<long double>(*it);
  const std::complex<double> f = m.fmin_shifted(theta);
  const long double mag = std::abs(px) * static_cast<long double>(std::abs(f));
  return {theta, mag / x, static_cast<double>(mag), static_cast<double>(px * f.real() / x)};
}

std::vector<Sample> sample_range(const Model& m, const PolynomialP& p, double lo, double hi,
                                 std::size_t count) {
  std::vector<Sample> out(count);
  const double h = count > 1 ? (hi - lo) / static_cast<double>(count - 1) : 0.0;
  detail::parallel_for(count, [&](std::size_t i) {
    const double theta = (i + 1 == count) ? hi : lo + h * static_cast<double>(i);
    out[i] = sample(m, p, theta);
  });
  return out;
}

double magnitude(const Model& m, const PolynomialP& p, double theta) {
  return std::abs(f_p(m, p, theta));
}

void validate(const ClassifyOptions& o) {
  if (!(o.theta_max >= 10.0) || !std::isfinite(o.theta_max))
    throw invalid_argument("classify: theta_max must be at least 10");
  if (!(o.margin > 0.0) || !(o.margin < 0.5))
    throw invalid_argument("classify: margin must lie in (0, 0.5)");
  if (o.samples < 5) throw invalid_argument("classify: need at least 5 samples");
}

}  // namespace

std::optional<double> admissible_alpha_bound(const Model& m) {
  const auto a = m.asymptote();
  switch (a.kind) {
    case Asymptote::Kind::finite:
      return 1.0 / (2.0 * a.value);
    case Asymptote::Kind::infinite:
      return std::nullopt;
    case Asymptote::Kind::inconclusive:
      break;
  }
  throw domain_error("admissible_alpha_bound: asymptote of '" + m.name() + "' is inconclusive");
}

std::vector<std::pair<double, double>> scan_profile(const Model& m, const PolynomialP& p,
                                                    double theta_max, std::size_t samples) {
  if (!(theta_max > 0.0) || !std::isfinite(theta_max))
    throw invalid_argument("scan: theta_max must be positive");
  if (samples < 2) throw invalid_argument("scan: need at least 2 samples");
  const auto s = sample_range(m, p, 0.0, theta_max, samples);
  std::vector<std::pair<double, double>> out;
  out.reserve(s.size());
  for (const auto& x : s) out.emplace_back(x.theta, x.magnitude);
  return out;
}

std::optional<NegativityWitness> negativity_scan(const Model& m, const PolynomialP& p,
                                                 const ScanOptions& options) {
  if (!(options.epsilon > 0.0)) throw invalid_argument("negativity_scan: epsilon must be positive");
  const auto profile = scan_profile(m, p, options.theta_max, options.samples);
  const double threshold = 1.0 + options.epsilon;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (!(profile[j].second > threshold)) continue;

    double a = profile[j > 0 ? j - 1 : 0].first;
    double b = profile[std::min(j + 1, profile.size() - 1)].first;
    NegativityWitness w;
    w.theta = profile[j].first;
    w.magnitude = profile[j].second;
    // Golden-section search for the local maximum of |F_P| in [a, b].
    const double r = std::numbers::phi - 1.0;
    double x1 = b - r * (b - a);
    double x2 = a + r * (b - a);
    double f1 = magnitude(m, p, x1);
    double f2 = magnitude(m, p, x2);
    for (int it = 0; it < 80 && b - a > 1e-12 * std::max(1.0, std::abs(b)); ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + r * (b - a);
        f2 = magnitude(m, p, x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - r * (b - a);
        f1 = magnitude(m, p, x1);
      }
    }
    for (double t : {a, b, x1, x2}) {
      const double v = magnitude(m, p, t);
      if (v > w.magnitude && std::isfinite(v)) {
        w.theta = t;
        w.magnitude = v;
      }
    }
    return w;
  }
  return std::nullopt;
}

bool attach_witness(NegativityWitness& w, const ConvergedBound& bound) {
  if (!(bound.lambda_min < 0.0)) return false;
  w.state = bound.witness;
  w.grid = bound.grid;
  w.energy = bound.lambda_min;
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "Holds";
    case Verdict::no_go:
      return "NoGo";
    case Verdict::inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

QEIVerdict classify_qei(const Model& m, const PolynomialP& p, const ClassifyOptions& options) {
  validate(options);
  const double tmax = options.theta_max;
  const auto all = sample_range(m, p, 0.0, tmax, options.samples);

  QEIVerdict v;
  v.theta_max = tmax;
  v.margin = options.margin;
  long double sup = 0.0L;
  for (const auto& s : all) sup = std::max(sup, s.ratio);
  v.pointwise_sup_ratio = static_cast<double>(sup);
  v.real_part_ratio = all.back().real_ratio;

  std::vector<long double> tail;
  for (const auto& s : all)
    if (s.theta >= 0.5 * tmax) tail.push_back(s.ratio);
  const auto r1 = sample(m, p, 0.5 * tmax).ratio;
  const auto r2 = sample(m, p, 0.75 * tmax).ratio;
  const auto r3 = sample(m, p, tmax).ratio;
  const long double d1 = r2 - r1;
  const long double d2 = r3 - r2;
  if (d1 > 0 && d2 > 0 && d2 >= d1) {
    v.divergent = true;
    v.c = static_cast<double>(std::min<long double>(r3, std::numeric_limits<double>::max()));
  } else {
    const long double denom = d2 - d1;
    long double c = r3;
    if (denom != 0.0L) {
      const long double aitken = r3 - d2 * d2 / denom;
      if (std::isfinite(static_cast<double>(aitken)) && aitken >= 0.0L) c = aitken;
    }
    v.c = static_cast<double>(c);
  }

  const long double lo = 0.5L - options.margin;
  const long double hi = 0.5L + options.margin;
  const bool tail_below = std::all_of(tail.begin(), tail.end(), [&](long double r) { return r < lo; });
  const bool tail_above = std::all_of(tail.begin(), tail.end(), [&](long double r) { return r > hi; });
  if (!v.divergent && v.c < lo && tail_below) {
    v.verdict = Verdict::holds;
    v.reason = "tail ratio below 1/2 - margin";
  } else if ((v.divergent || v.c > hi) && tail_above) {
    v.verdict = Verdict::no_go;
    v.reason = v.divergent ? "tail ratio grows without bound" : "tail ratio above 1/2 + margin";
  } else {
    v.verdict = Verdict::inconclusive;
    v.reason = "tail ratio within margin of 1/2 or not settled";
  }
  return v;
}

QEIVerdict classify_degree(const Model& m, const PolynomialP& p, const ClassifyOptions& options) {
  if (!m.asymptote().is_finite())
    throw domain_error("classify_degree: model '" + m.name() + "' has no finite asymptote");
  if (p.degree() < 2) return classify_qei(m, p, options);
  validate(options);
  auto v = classify_qei(m, p, options);
  v.verdict = Verdict::no_go;
  v.by_degree = true;
  v.reason = "deg P >= 2 with finite asymptote";
  return v;
}

Classification classify(const Model& m, const PolynomialP& p, const ClassifyOptions& options) {
  Classification out;
  out.asymptote = m.asymptote();
  if (out.asymptote.is_finite()) {
    out.verdict = classify_degree(m, p, options);
    out.alpha_bound = admissible_alpha_bound(m);
    if (p.degree() <= 1) {
      const auto c = p.coefficients();
      const double alpha = c.size() > 1 ? c[1] : 0.0;
      out.alpha_admissible = std::abs(alpha) < *out.alpha_bound;
    }
  } else {
    out.verdict = classify_qei(m, p, options);
  }
  return out;
}

}  // namespace qei
