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

#include "config.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

namespace qeicli {
namespace {

using json = nlohmann::json;

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw validation_error(where + " must be an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw validation_error("unknown key '" + k + "' in " + where);
}

double number(const json& j, const std::string& key, const std::string& where, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) throw validation_error(where + "." + key + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw validation_error(where + "." + key + " must be finite");
  return d;
}

std::size_t count(const json& j, const std::string& key, const std::string& where,
                  std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) throw validation_error(where + "." + key + " must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string text(const json& j, const std::string& key, const std::string& where,
                 const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_string()) throw validation_error(where + "." + key + " must be a string");
  return v.get<std::string>();
}

qei_convention parse_convention(const std::string& s) {
  if (s == "plain") return QEI_CONVENTION_PLAIN;
  if (s == "normalized") return QEI_CONVENTION_NORMALIZED;
  throw validation_error("convention must be 'plain' or 'normalized', got '" + s + "'");
}

TestFnSpec parse_testfn(const json& j, const std::string& where) {
  allow_keys(j, where, {"kind", "sigma", "center", "scale", "path"});
  TestFnSpec s;
  s.kind = text(j, "kind", where, "gaussian");
  s.sigma = number(j, "sigma", where, 1.0);
  s.center = number(j, "center", where, 0.0);
  s.scale = number(j, "scale", where, 1.0);
  s.path = text(j, "path", where, "");
  if (s.kind != "gaussian" && s.kind != "bump" && s.kind != "tabulated")
    throw validation_error(where + ".kind must be gaussian, bump or tabulated");
  if (s.kind == "tabulated" && s.path.empty())
    throw validation_error(where + ".path is required for tabulated test functions");
  return s;
}

}  // namespace

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

nlohmann::json describe(const TestFnSpec& s) {
  json j{{"kind", s.kind}, {"scale", s.scale}};
  if (s.kind == "tabulated") {
    j["path"] = s.path;
  } else {
    j["sigma"] = s.sigma;
    j["center"] = s.center;
  }
  return j;
}

RunConfig load_config(const std::optional<std::filesystem::path>& path, const Overrides& o) {
  json j = json::object();
  if (path) {
    std::ifstream f(*path);
    if (!f) throw validation_error("cannot open config file " + path->string());
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw validation_error(std::string("config is not valid JSON: ") + e.what());
    }
  }
  allow_keys(j, "config",
             {"model", "polynomial", "test_function", "family", "grid", "ladder", "tolerance",
              "convention", "scan", "classify", "bound", "output", "strict"});

  if (o.out) j["output"] = *o.out;
  if (o.convention) j["convention"] = *o.convention;
  if (o.tolerance) j["tolerance"] = *o.tolerance;
  if (o.theta_max) {
    for (const char* key : {"scan", "classify"}) {
      if (!j.contains(key)) j[key] = json::object();
      if (!j[key].is_object()) throw validation_error(std::string(key) + " must be an object");
      j[key]["theta_max"] = *o.theta_max;
    }
  }
  if (o.strict) j["strict"] = true;

  RunConfig c;
  const json model = j.value("model", json::object());
  allow_keys(model, "model", {"kind", "name", "mass", "coupling", "table", "asymptote"});
  c.model.kind = text(model, "kind", "model", "ising");
  c.model.name = text(model, "name", "model", "");
  c.model.mass = number(model, "mass", "model", 1.0);
  if (model.contains("coupling")) c.model.coupling = number(model, "coupling", "model", 0.0);
  c.model.table = text(model, "table", "model", "");
  if (model.contains("asymptote")) c.model.asymptote = number(model, "asymptote", "model", 0.0);
  if (c.model.kind == "sinh_gordon" && !c.model.coupling)
    throw validation_error("model.coupling is required for sinh_gordon");
  if (c.model.kind == "custom" && c.model.table.empty())
    throw validation_error("model.table is required for custom models");
  if (c.model.kind != "free" && c.model.kind != "ising" && c.model.kind != "sinh_gordon" &&
      c.model.kind != "custom")
    throw validation_error("unknown model.kind '" + c.model.kind + "' (expected free, ising, sinh_gordon or custom)");

  if (j.contains("polynomial")) {
    const auto& p = j.at("polynomial");
    allow_keys(p, "polynomial", {"coefficients", "alpha"});
    if (p.contains("coefficients") == p.contains("alpha"))
      throw validation_error("polynomial needs exactly one of coefficients or alpha");
    if (p.contains("alpha")) {
      const double a = number(p, "alpha", "polynomial", 0.0);
      c.polynomial = {1.0 - a, a};
    } else {
      const auto& arr = p.at("coefficients");
      if (!arr.is_array() || arr.empty())
        throw validation_error("polynomial.coefficients must be a non-empty array");
      c.polynomial.clear();
      for (const auto& v : arr) {
        if (!v.is_number()) throw validation_error("polynomial.coefficients must be numbers");
        c.polynomial.push_back(v.get<double>());
      }
    }
  }

  if (j.contains("test_function")) c.test_function = parse_testfn(j.at("test_function"), "test_function");
  if (j.contains("family")) {
    const auto& fam = j.at("family");
    if (!fam.is_array() || fam.empty()) throw validation_error("family must be a non-empty array");
    for (std::size_t i = 0; i < fam.size(); ++i)
      c.family.push_back(parse_testfn(fam[i], "family[" + std::to_string(i) + "]"));
  } else {
    for (double s : {0.5, 1.0, 2.0}) {
      TestFnSpec t;
      t.sigma = s / c.model.mass;
      c.family.push_back(t);
    }
  }

  qei_minimize_options_default(&c.minimize);
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    allow_keys(g, "grid", {"kind", "core_cutoff", "core_fraction"});
    const std::string kind = text(g, "kind", "grid", "composite");
    if (kind == "composite") {
      c.minimize.grid.kind = QEI_GRID_COMPOSITE;
    } else if (kind == "gauss_legendre") {
      c.minimize.grid.kind = QEI_GRID_GAUSS_LEGENDRE;
    } else {
      throw validation_error("grid.kind must be composite or gauss_legendre");
    }
    c.minimize.grid.core_cutoff = number(g, "core_cutoff", "grid", c.minimize.grid.core_cutoff);
    c.minimize.grid.core_fraction = number(g, "core_fraction", "grid", c.minimize.grid.core_fraction);
  }
  if (j.contains("ladder")) {
    const auto& lad = j.at("ladder");
    if (!lad.is_array() || lad.empty()) throw validation_error("ladder must be a non-empty array");
    for (std::size_t i = 0; i < lad.size(); ++i) {
      const std::string where = "ladder[" + std::to_string(i) + "]";
      allow_keys(lad[i], where, {"cutoff", "n"});
      c.ladder.push_back({number(lad[i], "cutoff", where, 8.0), count(lad[i], "n", where, 256)});
    }
  } else {
    c.ladder = {{8.0, 256}, {12.0, 512}};
  }
  for (std::size_t i = 1; i < c.ladder.size(); ++i)
    if (c.ladder[i].n <= c.ladder[i - 1].n || c.ladder[i].cutoff < c.ladder[i - 1].cutoff)
      throw validation_error("ladder must strictly refine: n increasing, cutoff non-decreasing");
  c.minimize.tolerance = number(j, "tolerance", "config", c.minimize.tolerance);
  if (!(c.minimize.tolerance > 0.0)) throw validation_error("tolerance must be positive");
  const auto conv = parse_convention(text(j, "convention", "config", "plain"));
  c.minimize.convention = conv;

  qei_scan_options_default(&c.scan);
  if (j.contains("scan")) {
    const auto& s = j.at("scan");
    allow_keys(s, "scan", {"theta_max", "samples", "epsilon", "attach_witness"});
    c.scan.theta_max = number(s, "theta_max", "scan", c.scan.theta_max);
    c.scan.samples = count(s, "samples", "scan", c.scan.samples);
    c.scan.epsilon = number(s, "epsilon", "scan", c.scan.epsilon);
    if (s.contains("attach_witness")) {
      if (!s.at("attach_witness").is_boolean()) throw validation_error("scan.attach_witness must be a boolean");
      c.attach_witness = s.at("attach_witness").get<bool>();
    }
  }
  qei_classify_options_default(&c.classify);
  if (j.contains("classify")) {
    const auto& s = j.at("classify");
    allow_keys(s, "classify", {"theta_max", "margin", "samples"});
    c.classify.theta_max = number(s, "theta_max", "classify", c.classify.theta_max);
    c.classify.margin = number(s, "margin", "classify", c.classify.margin);
    c.classify.samples = count(s, "samples", "classify", c.classify.samples);
  }
  qei_ising_bound_options_default(&c.bound);
  c.bound.convention = conv;
  if (j.contains("bound")) {
    const auto& s = j.at("bound");
    allow_keys(s, "bound", {"tail_tolerance", "q_max", "q_samples"});
    c.bound.tail_tolerance = number(s, "tail_tolerance", "bound", c.bound.tail_tolerance);
    c.q_max = number(s, "q_max", "bound", c.q_max);
    c.q_samples = count(s, "q_samples", "bound", c.q_samples);
  }
  if (!(c.scan.theta_max > 0.0) || c.scan.samples < 2 || !(c.scan.epsilon > 0.0))
    throw validation_error("scan needs theta_max > 0, samples >= 2 and epsilon > 0");
  if (!(c.classify.theta_max >= 10.0) || !(c.classify.margin > 0.0 && c.classify.margin < 0.5) ||
      c.classify.samples < 5)
    throw validation_error("classify needs theta_max >= 10, 0 < margin < 0.5 and samples >= 5");
  if (!(c.q_max > 1.0) || c.q_samples < 2)
    throw validation_error("bound needs q_max > 1 and q_samples >= 2");
  c.out = text(j, "output", "config", c.out.string());
  if (j.contains("strict")) {
    if (!j.at("strict").is_boolean()) throw validation_error("strict must be a boolean");
    c.strict = j.at("strict").get<bool>();
  }

  c.effective = j;
  c.effective.erase("output");
  c.hash = fnv1a_hex(c.effective.dump());
  return c;
}

TestFnHandle make_testfn(const TestFnSpec& s) {
  qei_testfn* raw = nullptr;
  if (s.kind == "gaussian") {
    check(qei_testfn_gaussian(s.sigma, s.center, &raw), "test function");
  } else if (s.kind == "bump") {
    check(qei_testfn_bump(s.sigma, s.center, &raw), "test function");
  } else {
    check(qei_testfn_from_csv(s.path.c_str(), &raw), "test function");
  }
  TestFnHandle base(raw);
  if (s.scale == 1.0) return base;
  qei_testfn* scaled = nullptr;
  check(qei_testfn_scaled(base.get(), s.scale, &scaled), "test function");
  return TestFnHandle(scaled);
}

Built build(const RunConfig& c) {
  Built b;
  qei_model* m = nullptr;
  const char* name = c.model.name.empty() ? nullptr : c.model.name.c_str();
  if (c.model.kind == "custom") {
    check(qei_model_from_table_csv(name, c.model.mass, c.model.table.c_str(),
                                   c.model.asymptote.has_value(), c.model.asymptote.value_or(0.0), &m),
          "model");
  } else {
    const qei_model_kind k = c.model.kind == "free"    ? QEI_MODEL_FREE
                             : c.model.kind == "ising" ? QEI_MODEL_ISING
                                                       : QEI_MODEL_SINH_GORDON;
    check(qei_model_create(k, c.model.mass, c.model.coupling.value_or(0.0), name, &m), "model");
  }
  b.model.reset(m);
  qei_poly* p = nullptr;
  check(qei_poly_create(c.polynomial.data(), c.polynomial.size(), &p), "polynomial");
  b.poly.reset(p);
  if (c.test_function) b.g = make_testfn(*c.test_function);
  for (const auto& s : c.family) b.family.push_back(make_testfn(s));
  return b;
}

}  // namespace qeicli
