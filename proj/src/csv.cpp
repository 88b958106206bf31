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

#include "csv.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>

#include "qeilab/error.hpp"

namespace qei::detail {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_row(std::string_view line, std::vector<double>& out) {
  out.clear();
  while (true) {
    const auto comma = line.find(',');
    const auto field = trim(line.substr(0, comma));
    double v = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc() || ptr != last) return false;
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return true;
}

}  // namespace

std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path,
                                                  std::size_t min_columns) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::vector<double> row;
  std::string line;
  std::size_t lineno = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!parse_row(t, row)) {
      if (!seen_content) {
        seen_content = true;  // header
        continue;
      }
      throw invalid_argument(path.string() + ":" + std::to_string(lineno) + ": non-numeric field");
    }
    seen_content = true;
    if (row.size() < min_columns)
      throw invalid_argument(path.string() + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(min_columns) + " columns");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qei::detail
