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

#include <stdexcept>
#include <string>

namespace qei {

enum class ErrorCode {
  invalid_argument = 1,
  domain = 2,
  numerical = 3,
  io = 4,
};

/// Base exception for the library. `estimate` carries the achieved error
/// estimate when a numerical routine fails to reach its target.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double estimate = 0.0)
      : std::runtime_error(what), code_(code), estimate_(estimate) {}

  ErrorCode code() const noexcept { return code_; }
  double estimate() const noexcept { return estimate_; }

 private:
  ErrorCode code_;
  double estimate_;
};

inline Error invalid_argument(const std::string& what) {
  return Error(ErrorCode::invalid_argument, what);
}
inline Error domain_error(const std::string& what) {
  return Error(ErrorCode::domain, what);
}
inline Error numerical_error(const std::string& what, double estimate) {
  return Error(ErrorCode::numerical, what, estimate);
}
inline Error io_error(const std::string& what) { return Error(ErrorCode::io, what); }

}  // namespace qei
