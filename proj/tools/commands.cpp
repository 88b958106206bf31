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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

namespace qeicli {
namespace {

using json = nlohmann::json;

// Tolerance for the free-field positivity rows of verify, relative to ||M||.
constexpr double kZeroScale = 1e-8;
// Relative slack in lambda_min >= bound.
constexpr double kBoundSlack = 1e-6;

const char* convention_name(qei_convention c) {
  return c == QEI_CONVENTION_PLAIN ? "plain" : "normalized";
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void write_text(const std::filesystem::path& path, const std::string& s) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError(kValidation, "io", "cannot write " + path.string());
  f << s;
  if (!f) throw CliError(kValidation, "io", "write failed: " + path.string());
}

void write_json(const std::filesystem::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Context {
 public:
  explicit Context(const RunConfig& c) : c_(c), built_(build(c)) {
    std::error_code ec;
    std::filesystem::create_directories(c.out, ec);
    if (ec) throw CliError(kValidation, "io", "cannot create output directory " + c.out.string());
  }

  const RunConfig& config() const { return c_; }
  const Built& built() const { return built_; }
  std::filesystem::path path(const std::string& file) const { return c_.out / file; }

  json model_json() const {
    const auto* m = built_.model.get();
    json j{{"name", read_string(qei_model_name, m)}, {"kind", c_.model.kind}, {"mass", c_.model.mass}};
    if (c_.model.coupling) j["coupling"] = *c_.model.coupling;
    qei_asymptote_kind kind;
    double value = 0.0;
    check(qei_model_asymptote(m, &kind, &value), "asymptote");
    json a{{"kind", kind == QEI_ASYMPTOTE_FINITE     ? "finite"
                    : kind == QEI_ASYMPTOTE_INFINITE ? "infinite"
                                                     : "inconclusive"}};
    if (kind == QEI_ASYMPTOTE_FINITE) a["value"] = value;
    j["asymptote"] = a;
    return j;
  }

  json poly_json() const {
    const auto* p = built_.poly.get();
    size_t n = 0;
    check(qei_poly_coefficients(p, nullptr, 0, &n), "polynomial");
    std::vector<double> coef(n);
    check(qei_poly_coefficients(p, coef.data(), n, &n), "polynomial");
    return {{"coefficients", coef}, {"degree", qei_poly_degree(p)},
            {"expression", read_string(qei_poly_describe, p)}};
  }

  json provenance(const std::string& command) const {
    json ladder = json::array();
    for (const auto& s : c_.ladder) ladder.push_back({{"cutoff", s.cutoff}, {"n", s.n}});
    return {{"command", command},
            {"version", qei_version()},
            {"config", c_.effective},
            {"config_hash", c_.hash},
            {"convention", convention_name(c_.minimize.convention)},
            {"ladder", ladder},
            {"tolerances",
             {{"minimize", c_.minimize.tolerance},
              {"boundary_mass_limit", c_.minimize.boundary_mass_limit},
              {"scan_epsilon", c_.scan.epsilon},
              {"classify_margin", c_.classify.margin},
              {"bound_tail", c_.bound.tail_tolerance},
              {"verify_bound_slack", kBoundSlack},
              {"verify_zero_scale", kZeroScale}}}};
  }

  const qei_testfn& require_g(const std::string& command) const {
    if (!built_.g) throw validation_error(command + " needs a test_function in the config");
    return *built_.g;
  }

  ConvergedHandle minimize(const qei_testfn& g, qei_convention conv) const {
    auto opts = c_.minimize;
    opts.convention = conv;
    qei_converged* raw = nullptr;
    check(qei_best_constant(built_.model.get(), built_.poly.get(), &g, c_.ladder.data(),
                            c_.ladder.size(), &opts, &raw),
          "minimize");
    return ConvergedHandle(raw);
  }

 private:
  const RunConfig& c_;
  Built built_;
};

json converged_json(const qei_converged* b, qei_converged_info* info_out = nullptr) {
  qei_converged_info info{};
  check(qei_converged_summary(b, &info), "minimize");
  json ladder = json::array();
  for (size_t i = 0; i < info.ladder_size; ++i) {
    qei_ladder_entry e{};
    check(qei_converged_ladder(b, i, &e), "minimize");
    ladder.push_back({{"cutoff", e.cutoff},
                      {"n", e.n},
                      {"lambda", e.lambda},
                      {"boundary_mass", e.boundary_mass},
                      {"hermiticity_defect", e.hermiticity_defect},
                      {"norm", e.norm},
                      {"extension", e.extension != 0}});
  }
  if (info_out != nullptr) *info_out = info;
  return {{"lambda_min", info.lambda_min},
          {"error_estimate", finite_or_null(info.error_estimate)},
          {"converged", info.converged != 0},
          {"degenerate", info.degenerate != 0},
          {"residual", info.residual},
          {"ladder", ladder},
          {"witness_size", info.witness_size}};
}

Outcome cmd_scan(const Context& ctx) {
  const auto& c = ctx.config();
  const auto& b = ctx.built();
  std::vector<double> theta(c.scan.samples);
  std::vector<double> mag(c.scan.samples);
  check(qei_scan_profile(b.model.get(), b.poly.get(), c.scan.theta_max, c.scan.samples,
                         theta.data(), mag.data()),
        "scan");
  std::string csv = "theta,abs_f_p\n";
  for (size_t i = 0; i < theta.size(); ++i) csv += csv_number(theta[i]) + "," + csv_number(mag[i]) + "\n";
  write_text(ctx.path("scan_profile.csv"), csv);

  ConvergedHandle bound;
  if (c.attach_witness) bound = ctx.minimize(ctx.require_g("scan"), c.minimize.convention);
  qei_witness_info w{};
  check(qei_negativity_scan(b.model.get(), b.poly.get(), &c.scan, bound.get(), &w), "scan");

  Outcome out;
  json witness = nullptr;
  if (w.found) {
    witness = {{"theta_P", w.theta}, {"abs_f_p", w.magnitude}};
    if (w.has_state) {
      check(qei_converged_write_witness_csv(bound.get(), ctx.path("witness.csv").string().c_str()), "scan");
      witness["energy"] = w.energy;
      witness["state_csv"] = "witness.csv";
    }
  }
  out.report = {{"command", "scan"},
                {"model", ctx.model_json()},
                {"polynomial", ctx.poly_json()},
                {"verdict", w.found ? "witness" : "none"},
                {"witness", witness},
                {"theta_max", c.scan.theta_max},
                {"samples", c.scan.samples},
                {"epsilon", c.scan.epsilon},
                {"profile_csv", "scan_profile.csv"},
                {"provenance", ctx.provenance("scan")}};
  write_json(ctx.path("scan.json"), out.report);
  return out;
}

Outcome cmd_classify(const Context& ctx) {
  const auto& c = ctx.config();
  const auto& b = ctx.built();
  qei_classification v{};
  check(qei_classify(b.model.get(), b.poly.get(), &c.classify, &v), "classify");
  qei_scan_options so = c.scan;
  so.theta_max = c.classify.theta_max;
  qei_witness_info w{};
  check(qei_negativity_scan(b.model.get(), b.poly.get(), &so, nullptr, &w), "classify");

  Outcome out;
  out.report = {{"command", "classify"},
                {"model", ctx.model_json()},
                {"polynomial", ctx.poly_json()},
                {"verdict", qei_verdict_name(v.verdict)},
                {"c", v.c},
                {"divergent", v.divergent != 0},
                {"by_degree", v.by_degree != 0},
                {"theta_max", v.theta_max},
                {"margin", v.margin},
                {"pointwise_sup_ratio", v.pointwise_sup_ratio},
                {"real_part_ratio", finite_or_null(v.real_part_ratio)},
                {"reason", v.reason},
                {"theta_P", w.found ? json(w.theta) : json(nullptr)},
                {"alpha_bound", v.has_alpha_bound ? json(v.alpha_bound) : json(nullptr)},
                {"alpha_admissible", v.alpha_admissible < 0 ? json(nullptr) : json(v.alpha_admissible == 1)},
                {"provenance", ctx.provenance("classify")}};
  write_json(ctx.path("classify.json"), out.report);
  return out;
}

Outcome cmd_minimize(const Context& ctx) {
  const auto& c = ctx.config();
  const auto& g = ctx.require_g("minimize");
  auto b = ctx.minimize(g, c.minimize.convention);
  qei_converged_info info{};
  json result = converged_json(b.get(), &info);
  check(qei_converged_write_witness_csv(b.get(), ctx.path("witness.csv").string().c_str()), "minimize");

  Outcome out;
  out.report = {{"command", "minimize"},
                {"model", ctx.model_json()},
                {"polynomial", ctx.poly_json()},
                {"test_function", describe(*c.test_function)},
                {"result", result},
                {"witness_csv", "witness.csv"},
                {"provenance", ctx.provenance("minimize")}};
  if (!info.converged && c.strict) out.code = kNonConvergence;
  write_json(ctx.path("minimize.json"), out.report);
  return out;
}

json bound_json(const qei_bound_result& r) {
  return {{"value", r.value},
          {"error", r.error},
          {"omega_cutoff", r.omega_cutoff},
          {"extrapolated", r.extrapolated != 0}};
}

Outcome cmd_bound(const Context& ctx) {
  const auto& c = ctx.config();
  const auto& g = ctx.require_g("bound");
  qei_bound_result r{};
  qei_bound_result r2{};
  check(qei_ising_bound(&g, c.model.mass, &c.bound, &r), "bound");
  check(qei_ising_bound(&g, 2.0 * c.model.mass, &c.bound, &r2), "bound");
  check(qei_write_q_csv(ctx.path("q_profile.csv").string().c_str(), c.q_max, c.q_samples), "bound");

  Outcome out;
  out.report = {{"command", "bound"},
                {"test_function", describe(*c.test_function)},
                {"mass", c.model.mass},
                {"convention", convention_name(c.bound.convention)},
                {"result", bound_json(r)},
                {"doubled_mass", {{"mass", 2.0 * c.model.mass}, {"result", bound_json(r2)}}},
                {"monotone_in_mass", std::abs(r2.value) <= std::abs(r.value)},
                {"q_csv", "q_profile.csv"},
                {"provenance", ctx.provenance("bound")}};
  write_json(ctx.path("bound.json"), out.report);
  return out;
}

Outcome cmd_verify(const Context& ctx) {
  const auto& c = ctx.config();
  const auto& b = ctx.built();
  const bool ising_p1 = c.model.kind == "ising" && qei_poly_degree(b.poly.get()) == 0;

  json rows = json::array();
  json per_convention = json::object();
  std::string csv = "convention,kind,sigma,center,scale,lambda_min,bound,threshold,converged,pass\n";
  bool any_unconverged = false;
  for (qei_convention conv : {QEI_CONVENTION_PLAIN, QEI_CONVENTION_NORMALIZED}) {
    bool all = true;
    for (size_t i = 0; i < c.family.size(); ++i) {
      const auto& spec = c.family[i];
      auto res = ctx.minimize(*b.family[i], conv);
      qei_converged_info info{};
      check(qei_converged_summary(res.get(), &info), "verify");
      qei_ladder_entry last{};
      check(qei_converged_ladder(res.get(), info.ladder_size - 1, &last), "verify");
      json row{{"convention", convention_name(conv)},
               {"test_function", describe(spec)},
               {"lambda_min", info.lambda_min},
               {"converged", info.converged != 0}};
      double threshold;
      json bound = nullptr;
      if (ising_p1) {
        auto bo = c.bound;
        bo.convention = conv;
        qei_bound_result r{};
        check(qei_ising_bound(b.family[i].get(), c.model.mass, &bo, &r), "verify");
        threshold = r.value - kBoundSlack * std::abs(r.value);
        bound = r.value;
        row["bound"] = bound_json(r);
      } else {
        threshold = -kZeroScale * last.norm;
      }
      const bool pass = info.lambda_min >= threshold;
      all = all && pass;
      any_unconverged = any_unconverged || !info.converged;
      row["threshold"] = threshold;
      row["pass"] = pass;
      if (!pass) {
        row["failure"] = "lambda_min " + csv_number(info.lambda_min) + " below threshold " +
                         csv_number(threshold) + " for " + describe(spec).dump();
      }
      rows.push_back(row);
      csv += std::string(convention_name(conv)) + "," + spec.kind + "," + csv_number(spec.sigma) + "," +
             csv_number(spec.center) + "," + csv_number(spec.scale) + "," +
             csv_number(info.lambda_min) + "," + (bound.is_null() ? "" : csv_number(bound.get<double>())) +
             "," + csv_number(threshold) + "," + (info.converged ? "true" : "false") + "," +
             (pass ? "true" : "false") + "\n";
    }
    per_convention[convention_name(conv)] = {{"all_pass", all}};
  }
  write_text(ctx.path("verify.csv"), csv);

  json satisfying = json::array();
  for (const char* n : {"plain", "normalized"})
    if (per_convention[n]["all_pass"].get<bool>()) satisfying.push_back(n);
  const char* selected = convention_name(c.minimize.convention);
  const bool pass = per_convention[selected]["all_pass"].get<bool>();

  Outcome out;
  out.report = {{"command", "verify"},
                {"model", ctx.model_json()},
                {"polynomial", ctx.poly_json()},
                {"comparison", ising_p1 ? "lambda_min >= ising_bound" : "lambda_min >= -zero_scale*||M||"},
                {"rows", rows},
                {"conventions", per_convention},
                {"satisfying_conventions", satisfying},
                {"selected_convention", selected},
                {"pass", pass},
                {"table_csv", "verify.csv"},
                {"provenance", ctx.provenance("verify")}};
  if (!pass) {
    out.code = kVerification;
  } else if (any_unconverged && c.strict) {
    out.code = kNonConvergence;
  }
  write_json(ctx.path("verify.json"), out.report);
  return out;
}

Outcome cmd_report(const Context& ctx) {
  Outcome out;
  json parts = json::object();
  auto take = [&](const char* name, Outcome o) {
    o.report.erase("provenance");
    parts[name] = std::move(o.report);
    out.code = std::max(out.code, o.code);
  };
  take("scan", cmd_scan(ctx));
  take("classify", cmd_classify(ctx));
  if (ctx.built().g) {
    take("minimize", cmd_minimize(ctx));
    take("bound", cmd_bound(ctx));
  }
  out.report = {{"command", "report"}, {"sections", parts}, {"provenance", ctx.provenance("report")}};
  write_json(ctx.path("report.json"), out.report);
  return out;
}

}  // namespace

Outcome run_command(const std::string& command, const RunConfig& c) {
  Context ctx(c);
  if (command == "scan") return cmd_scan(ctx);
  if (command == "classify") return cmd_classify(ctx);
  if (command == "minimize") return cmd_minimize(ctx);
  if (command == "bound") return cmd_bound(ctx);
  if (command == "verify") return cmd_verify(ctx);
  if (command == "report") return cmd_report(ctx);
  throw validation_error("unknown command " + command);
}

}  // namespace qeicli
