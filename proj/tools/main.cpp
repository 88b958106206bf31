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

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace {

void print_error(const std::string& kind, const std::string& message, int code) {
  const nlohmann::json j{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qeicli;

  CLI::App app{"qeilab: one-particle stress-energy kernels, QEI criteria and bounds"};
  app.set_version_flag("--version", std::string(qei_version()));
  app.require_subcommand(1);

  std::string config;
  Overrides o;
  std::string convention;
  double theta_max = 0.0;
  double tolerance = 0.0;
  std::string out;

  const std::pair<const char*, const char*> commands[] = {
      {"scan", "negativity scan of |F_P| with optional witness state"},
      {"classify", "QEI existence / no-go classification and admissible alpha"},
      {"minimize", "lowest eigenvalue of the one-particle kernel along a grid ladder"},
      {"bound", "Ising QEI bound and Q profile"},
      {"verify", "lambda_min against the Ising bound over a test-function family"},
      {"report", "scan, classify, minimize and bound in one run"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory");
    sub->add_option("--convention", convention, "Fourier convention")
        ->check(CLI::IsMember({"plain", "normalized"}));
    sub->add_option("--theta-max", theta_max, "scan / classify range");
    sub->add_option("--tolerance", tolerance, "relative convergence tolerance of minimize");
    sub->add_flag("--strict", o.strict, "treat non-convergence as fatal (exit 3)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what(), kValidation);
    return kValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  auto* sub = app.get_subcommands().front();
  if (sub->count("--out")) o.out = out;
  if (sub->count("--convention")) o.convention = convention;
  if (sub->count("--theta-max")) o.theta_max = theta_max;
  if (sub->count("--tolerance")) o.tolerance = tolerance;

  try {
    std::optional<std::filesystem::path> path;
    if (!config.empty()) path = config;
    const RunConfig c = load_config(path, o);
    const Outcome r = run_command(command, c);
    std::cout << r.report.dump(2) << "\n";
    return r.code;
  } catch (const CliError& e) {
    print_error(e.kind(), e.what(), e.code());
    return e.code();
  } catch (const std::exception& e) {
    print_error("internal", e.what(), kValidation);
    return kValidation;
  }
}
