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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "handles.hpp"
#include "json.hpp"

namespace qeicli {

struct ModelSpec {
  std::string kind = "ising";
  std::string name;
  double mass = 1.0;
  std::optional<double> coupling;
  std::string table;  // custom kind: CSV theta, Re, Im
  std::optional<double> asymptote;
};

struct TestFnSpec {
  std::string kind = "gaussian";
  double sigma = 1.0;
  double center = 0.0;
  double scale = 1.0;
  std::string path;  // tabulated kind
};

// Command-line overrides applied on top of the config file.
struct Overrides {
  std::optional<std::string> out;
  std::optional<std::string> convention;
  std::optional<double> theta_max;
  std::optional<double> tolerance;
  bool strict = false;
};

struct RunConfig {
  ModelSpec model;
  std::vector<double> polynomial{1.0};
  std::optional<TestFnSpec> test_function;
  std::vector<TestFnSpec> family;
  std::vector<qei_ladder_stage> ladder;
  qei_minimize_options minimize{};
  qei_scan_options scan{};
  bool attach_witness = false;
  qei_classify_options classify{};
  qei_ising_bound_options bound{};
  double q_max = 10.0;
  std::size_t q_samples = 1001;
  std::filesystem::path out = "qeilab-out";
  bool strict = false;

  // Effective configuration (file plus overrides, output directory removed)
  // and its FNV-1a hash; embedded in every report.
  nlohmann::json effective;
  std::string hash;
};

RunConfig load_config(const std::optional<std::filesystem::path>& path, const Overrides& o);

// Library objects built from a RunConfig. Construction validates every spec
// before any computation starts.
struct Built {
  ModelHandle model;
  PolyHandle poly;
  TestFnHandle g;  // empty when the config has no test_function
  std::vector<TestFnHandle> family;
};

Built build(const RunConfig& c);
TestFnHandle make_testfn(const TestFnSpec& s);

std::string fnv1a_hex(const std::string& s);
nlohmann::json describe(const TestFnSpec& s);

}  // namespace qeicli
