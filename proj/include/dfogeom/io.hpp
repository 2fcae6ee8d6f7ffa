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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dfogeom {

// All numeric output uses 10 significant digits so reruns are byte-identical.
std::string format_number(double value);

// Value rounded to 10 significant digits (for JSON emission).
double round_sig10(double value);

// Writes to `<path>.tmp` then renames over `path`.
void write_file_atomic(const std::string& path, std::string_view contents);

std::string read_file(const std::string& path);

std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace dfogeom
