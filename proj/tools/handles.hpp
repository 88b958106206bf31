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

// RAII wrappers over the C API handles and the CLI error type.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "qeilab/qeilab.h"

namespace qeicli {

enum ExitCode { kSuccess = 0, kValidation = 1, kVerification = 2, kNonConvergence = 3 };

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, std::string kind, const std::string& what)
      : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}
  ExitCode code() const noexcept { return code_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  ExitCode code_;
  std::string kind_;
};

inline CliError validation_error(const std::string& what) {
  return CliError(kValidation, "validation", what);
}

// Maps a failed library call onto an exit code. Numerical failures are
// non-convergence; everything else is treated as invalid input.
inline void check(qei_status s, const std::string& context) {
  if (s == QEI_OK) return;
  const std::string msg = context + ": " + qei_last_error();
  if (s == QEI_ERR_NUMERICAL) throw CliError(kNonConvergence, "numerical", msg);
  if (s == QEI_ERR_INTERNAL) throw CliError(kValidation, "internal", msg);
  throw CliError(kValidation, qei_status_name(s), msg);
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Free(p); }
};

using ModelHandle = std::unique_ptr<qei_model, Deleter<qei_model, qei_model_free>>;
using PolyHandle = std::unique_ptr<qei_poly, Deleter<qei_poly, qei_poly_free>>;
using TestFnHandle = std::unique_ptr<qei_testfn, Deleter<qei_testfn, qei_testfn_free>>;
using ConvergedHandle = std::unique_ptr<qei_converged, Deleter<qei_converged, qei_converged_free>>;

template <class F, class... Args>
std::string read_string(F f, Args... args) {
  size_t needed = 0;
  check(f(args..., nullptr, 0, &needed), "string query");
  std::string s(needed, '\0');
  check(f(args..., s.data(), s.size(), &needed), "string query");
  s.resize(needed > 0 ? needed - 1 : 0);
  return s;
}

}  // namespace qeicli
