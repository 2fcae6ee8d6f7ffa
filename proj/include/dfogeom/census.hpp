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

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "dfogeom/sweep.hpp"

namespace dfogeom {

struct TrapRow {
  std::uint64_t outliers = 0;
  std::uint64_t traps = 0;
  double rate() const { return outliers == 0 ? 0.0 : static_cast<double>(traps) / outliers; }
};

// A placed point is an "outlier" in a configuration when every other point
// of {fixed, y3, y4} is farther than far_radius from it, and a "trap" when in
// addition some probe position within near_radius of it makes y5 the
// Lambda-bad point.
struct TrapCensus {
  double far_radius = 2.0;
  double near_radius = 2.0;
  TrapRow y3, y4, total;
};

nlohmann::json to_json(const TrapCensus& census);

struct FocalStatus {
  bool outlier = false;
  bool trap = false;
};

// focal is 0 for y3, 1 for y4.
FocalStatus focal_status(const SweepConfig& config, const ConfigurationResult& result, int focal,
                         double far_radius, double near_radius);

class TrapCensusAccumulator {
 public:
  TrapCensusAccumulator(SweepConfig config, double far_radius, double near_radius);
  void add(const ConfigurationResult& result);
  const TrapCensus& census() const { return census_; }

 private:
  SweepConfig config_;
  TrapCensus census_;
};

// Splits a record stream into configurations (consecutive runs with equal y3
// and y4).
std::vector<ConfigurationResult> group_by_configuration(const std::vector<SweepRecord>& records);

TrapCensus trap_census(const std::vector<SweepRecord>& records, const SweepConfig& config);
TrapCensus trap_census(const std::vector<SweepRecord>& records, const SweepConfig& config,
                       double far_radius, double near_radius);

// Conjecture on isolated points: whenever y4 is farther than far_radius from
// y1, y2 and y3, some y5 within near_radius of y4 is the Lambda-bad point.
struct Conjecture1Report {
  std::uint64_t configurations = 0;
  std::uint64_t hypothesis_count = 0;
  std::uint64_t satisfied_count = 0;
  std::vector<std::pair<Point, Point>> counterexamples;  // (y3, y4)

  double counterexample_fraction() const;
};

nlohmann::json to_json(const Conjecture1Report& report);

class Conjecture1Checker {
 public:
  explicit Conjecture1Checker(SweepConfig config) : config_(std::move(config)) {}
  void add(const ConfigurationResult& result);
  const Conjecture1Report& report() const { return report_; }

 private:
  SweepConfig config_;
  Conjecture1Report report_;
};

Conjecture1Report check_conjecture_1(const SweepConfig& config, int jobs = 0);

// Which line a collinear triple y_i, y_j, y_k designates for the probe:
// the line through the three points, or the set {t * (y_k - y_j) : t != 0}
// through the origin.
enum class LineReading { ThroughPoints, ThroughOrigin };

const char* to_string(LineReading reading);
LineReading parse_line_reading(const std::string& text);

struct CollinearLine {
  Point anchor;                 // a member point
  std::vector<double> direction;
  std::vector<int> members;     // internal labels of the collinear points, ascending
};

// Maximal collinear subsets (>= 3 members) of a planar point list; points are
// identified by their labels. Collinearity: |cross| <= 1e-9 * |u| |v|.
std::vector<CollinearLine> collinear_lines(const std::vector<Point>& points);

bool on_line(const CollinearLine& line, const Point& x, LineReading reading);

struct Conjecture2Instance {
  Point y3, y4;
  CollinearLine line;
  std::uint64_t probes_on_line = 0;
  std::uint64_t poised_on_line = 0;
  std::vector<Point> lambda_bad_on_line;

  bool satisfied() const { return !lambda_bad_on_line.empty(); }
  bool vacuous() const { return poised_on_line == 0; }
};

struct Conjecture2Report {
  LineReading reading = LineReading::ThroughPoints;
  std::uint64_t configurations = 0;
  std::uint64_t hypothesis_count = 0;
  std::uint64_t satisfied_count = 0;
  std::uint64_t vacuous_count = 0;  // no poised probe on the line at all
  std::vector<Conjecture2Instance> violations;

  double satisfaction_rate() const;
};

nlohmann::json to_json(const Conjecture2Instance& instance);
nlohmann::json to_json(const Conjecture2Report& report);

std::vector<Conjecture2Instance> conjecture2_instances(const SweepConfig& config,
                                                       const ConfigurationResult& result,
                                                       LineReading reading);

class Conjecture2Checker {
 public:
  Conjecture2Checker(SweepConfig config, LineReading reading);
  void add(const ConfigurationResult& result);
  const Conjecture2Report& report() const { return report_; }

 private:
  SweepConfig config_;
  Conjecture2Report report_;
};

Conjecture2Report check_conjecture_2(const SweepConfig& config, LineReading reading, int jobs = 0);

}  // namespace dfogeom
