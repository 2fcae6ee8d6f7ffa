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
#include <vector>

#include "dfogeom/lof.hpp"
#include "dfogeom/poisedness.hpp"
#include "dfogeom/sweep.hpp"

namespace dfogeom {

// One drawn element. Factor figures use circles whose radius grows with
// `value`; sweep figures use fixed-size markers.
struct FigureMark {
  double x = 0.0;
  double y = 0.0;
  std::string name;
  double value = 0.0;
  std::string css_class;  // "point", "highlight", "interp", "blue", "red", "green", "none"
};

enum class HighlightRule {
  Largest,   // the point with the largest factor
  BadPoint,  // only the report's bad point, if any
};

std::vector<FigureMark> lof_marks(const PointSet& set, const LofReport& report, HighlightRule rule);
std::vector<FigureMark> poisedness_marks(const PointSet& set, const PoisednessReport& report,
                                         HighlightRule rule);
// Interpolation points in black plus one marker per probe position, colored
// by state: blue = Lambda-bad, red = LOF-bad, green = both, none otherwise.
std::vector<FigureMark> sweep_marks(const SweepConfig& config, const ConfigurationResult& result);

std::string render_factor_svg(const std::vector<FigureMark>& marks, const std::string& title);
std::string render_sweep_svg(const std::vector<FigureMark>& marks, const std::string& title);
std::string marks_csv(const std::vector<FigureMark>& marks);

// Writes `path` (SVG) and its CSV twin (extension replaced by .csv).
void write_figure(const std::string& path, const std::string& svg,
                  const std::vector<FigureMark>& marks);
std::string csv_twin_path(const std::string& svg_path);

}  // namespace dfogeom
