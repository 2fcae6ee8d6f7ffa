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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfogeom/core.hpp"
#include "dfogeom/lagrange.hpp"

namespace dfogeom {

// Published per-point values for y1..y5 of the five-point example.
struct Table1Published {
  static constexpr std::array<double, 5> k_distance{1.4142, 1.4142, 1.0000, 1.4142, 2.0000};
  static constexpr std::array<double, 5> lof{0.8570, 0.9858, 1.1532, 1.0169, 1.0257};
  static constexpr std::array<double, 5> lambda{5.1666, 4.0000, 2.1505, 4.0000, 6.0000};
};

// One way of turning the example into a computable configuration.
struct Table1Interpretation {
  std::string id;
  std::string description;
  PointSet set;
  std::vector<std::string> names;  // display name per point ("y0".."y5")
  std::vector<std::size_t> columns;  // positions reported as y1..y5
  int k = 3;
  BasisMode mode = BasisMode::Determined;
};

struct Table1Column {
  std::string name;
  double k_distance = 0.0;
  double lof = 0.0;
  std::optional<double> lambda;  // unset when the set is not poised
};

struct Table1Result {
  Table1Interpretation interpretation;
  bool poised = false;
  std::vector<Table1Column> columns;
  std::string lambda_bad;     // empty when not poised
  std::string lof_argmax;
  std::string lof_bad;        // empty when max LOF <= 1.2
  double max_dev_k_distance = 0.0;
  double max_dev_lof = 0.0;
  std::optional<double> max_dev_lambda;
};

// The six points (0,0),(1,0),(0,1),(2,0),(1,1),(0,2).
PointSet six_point_example();

// Six-point set (determined basis) and the five-point set without (0,0)
// (minimum Frobenius norm and reduced basis), each with k = 1 and k = 3.
std::vector<Table1Interpretation> table1_interpretations();

Table1Result evaluate_table1(const Table1Interpretation& interpretation);

nlohmann::json table1_report();
std::string table1_text(const std::vector<Table1Result>& results);

}  // namespace dfogeom
