// Copyright 2026 The ccawalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace ccawalk::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Tabular command output. Rendered either as CSV (comment header, column
/// row, records) or as JSON ({"metadata", "columns", "records"}).
struct Table {
  std::vector<std::string> comments;
  /// Written verbatim under "metadata" in JSON mode.
  nlohmann::json metadata = nlohmann::json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, '.' decimal separator, locale independent.
std::string format_double(double value);

void write_csv(std::ostream &out, const Table &table);
void write_json(std::ostream &out, const Table &table);

/// Writes to path, or stdout when path is empty. Throws IoError.
void write_table(const Table &table, const std::string &format, const std::string &path);

/// Parsed CSV numeric body: comment lines skipped, header row captured.
struct CsvData {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

CsvData read_csv(std::istream &in);
CsvData read_csv_file(const std::string &path);

/// strtod-based parse that rejects trailing garbage.
double parse_double(const std::string &text);

}  // namespace ccawalk::cli
