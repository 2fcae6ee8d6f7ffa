// Copyright 2026 The dfogeom Authors
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

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfogeom/core.hpp"
#include "dfogeom/io.hpp"

namespace dfogeom {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

double round_sig10(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

void write_file_atomic(const std::string& path, std::string_view contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("failed writing " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r' && ch != ' ' && ch != '\t') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

PointSet parse_points_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t dim = 0;
  bool have_header = false;
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split_csv_line(line);
    if (!have_header) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] != "x" + std::to_string(i + 1)) {
          throw InputError("point CSV header must be x1,x2,...,xn (got '" + line + "')");
        }
      }
      dim = fields.size();
      have_header = true;
      continue;
    }
    if (fields.size() != dim) {
      throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                       " values");
    }
    std::vector<double> row(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      char* end = nullptr;
      errno = 0;
      row[i] = std::strtod(fields[i].c_str(), &end);
      if (fields[i].empty() || *end != '\0' || errno == ERANGE) {
        throw InputError("line " + std::to_string(line_no) + ": bad number '" + fields[i] + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw InputError("point CSV is empty");
  return PointSet::from_coords(rows);
}

PointSet load_points_csv(const std::string& path) { return parse_points_csv(read_file(path)); }

}  // namespace dfogeom
