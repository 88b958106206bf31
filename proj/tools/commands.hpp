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

#include <string>

#include "config.hpp"

namespace qeicli {

struct Outcome {
  nlohmann::json report;
  ExitCode code = kSuccess;
};

// Runs one of scan | classify | minimize | bound | verify | report, writing
// its JSON and CSV outputs into c.out.
Outcome run_command(const std::string& command, const RunConfig& c);

}  // namespace qeicli
