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

#include <filesystem>
#include <vector>

namespace qei::detail {

// Reads comma-separated numeric rows with at least `min_columns` fields.
// A non-numeric first line is treated as a header; blank lines and lines
// starting with '#' are skipped.
std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path,
                                                  std::size_t min_columns);

}  // namespace qei::detail
