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

#include "table.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scenario.hpp"

namespace ccawalk::cli {

namespace {

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render(const Cell &cell, bool for_json) {
  if (const auto *i = std::get_if<std::int64_t>(&cell)) {
    return std::to_string(*i);
  }
  if (const auto *d = std::get_if<double>(&cell)) {
    return format_double(*d);
  }
  const auto &s = std::get<std::string>(cell);
  return for_json ? nlohmann::json(s).dump() : csv_field(s);
}

// Splits one CSV record; handles quoted fields but not embedded newlines.
std::vector<std::string> split_record(const std::string &line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream &out, const Table &table) {
  for (const auto &c : table.comments) {
    out << "# " << c << '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(table.columns[i]);
  }
  out << '\n';
  for (const auto &row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << render(row[i], false);
    }
    out << '\n';
  }
}

void write_json(std::ostream &out, const Table &table) {
  out << "{\n  \"metadata\": " << table.metadata.dump() << ",\n  \"columns\": "
      << nlohmann::json(table.columns).dump() << ",\n  \"records\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n    {" : "\n    {");
    const auto &row = table.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? ", " : "") << nlohmann::json(table.columns[i]).dump() << ": " << render(row[i], true);
    }
    out << '}';
  }
  out << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

void write_table(const Table &table, const std::string &format, const std::string &path) {
  const auto emit = [&](std::ostream &os) {
    if (format == "json") {
      write_json(os, table);
    } else {
      write_csv(os, table);
    }
  };
  if (path.empty()) {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  emit(file);
  file.flush();
  if (!file) {
    throw IoError("failed writing '" + path + "'");
  }
}

CsvData read_csv(std::istream &in) {
  CsvData data;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header && !line.empty() && line[0] == '#') {
      data.comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    if (line.empty()) continue;
    if (!have_header) {
      data.columns = split_record(line);
      have_header = true;
    } else {
      data.rows.push_back(split_record(line));
    }
  }
  return data;
}

CsvData read_csv_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "'");
  }
  return read_csv(in);
}

double parse_double(const std::string &text) {
  errno = 0;
  char *end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || (errno == ERANGE && std::isinf(v))) {
    throw ConfigError("not a number: '" + text + "'");
  }
  return v;
}

}  // namespace ccawalk::cli
