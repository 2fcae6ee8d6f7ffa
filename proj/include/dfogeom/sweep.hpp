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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfogeom/core.hpp"
#include "dfogeom/lagrange.hpp"

namespace dfogeom {

// Grid experiment: fixed points y1..yF, two placed points and one probe
// point moving over the lattice. Internal labels are 0-based (y1 -> 0);
// reports name points y1, y2, ... as in the five-point experiment.
struct SweepConfig {
  GridRegion region{{-5.0, -5.0}, {5.0, 5.0}, 1.0};
  std::vector<Point> fixed_points{Point{-1.0, 0.0}, Point{1.0, 0.0}};
  // 0 selects |set| - 2.
  int k = 3;
  double lof_threshold = 1.2;
  BasisMode basis_mode = BasisMode::MinFrobeniusNorm;
  // Used by BasisMode::ReducedBasis; empty selects {1, x_i, x_i^2}.
  std::string reduced_monomials;
  double trap_far_radius = 2.0;
  double trap_near_radius = 2.0;

  void validate() const;
  std::size_t set_size() const { return fixed_points.size() + 3; }
  int effective_k() const;
  int label_y3() const { return static_cast<int>(fixed_points.size()); }
  int label_y4() const { return label_y3() + 1; }
  int label_y5() const { return label_y3() + 2; }
  MonomialBasis reduced_basis() const;
};

nlohmann::json to_json(const SweepConfig& config);
SweepConfig sweep_config_from_json(const nlohmann::json& j);

// Name of an internal label in the experiment's 1-based convention ("y3").
std::string point_name(int label);

enum class SweepState { Both, LambdaOnly, LofOnly, Neither, Unpoised };

const char* to_string(SweepState state);

struct SweepRecord {
  Point y3, y4, y5;
  bool poised = false;
  std::optional<int> lambda_bad;  // unset when not poised
  std::optional<int> lof_bad;     // unset when not poised or below threshold
  int y5_label = 4;

  bool lambda_bad_is_y5() const { return poised && lambda_bad == y5_label; }
  bool lof_bad_is_y5() const { return poised && lof_bad == y5_label; }
  bool both() const { return lambda_bad_is_y5() && lof_bad_is_y5(); }
  bool neither() const { return poised && !lambda_bad_is_y5() && !lof_bad_is_y5(); }
  SweepState state() const;
};

// All probe positions for one placement of (y3, y4), in lattice order.
struct ConfigurationResult {
  Point y3, y4;
  std::vector<SweepRecord> records;
};

// Classifies one complete point set (fixed points, y3, y4, y5).
SweepRecord classify(const SweepConfig& config, const Point& y3, const Point& y4, const Point& y5);

// Lattice minus fixed points.
std::vector<Point> admissible_positions(const SweepConfig& config);

// Kernel shared by every sweep driver.
ConfigurationResult evaluate_configuration(const SweepConfig& config,
                                           const std::vector<Point>& admissible, const Point& y3,
                                           const Point& y4);

// y5 position -> record, for every admissible y5 given y3 and y4.
std::map<std::vector<double>, SweepRecord> run_example1(const SweepConfig& config, const Point& y3,
                                                        const Point& y4);

using ConfigurationSink = std::function<void(const ConfigurationResult&)>;

// Ordered (y3, y4) pairs of distinct admissible positions, y3 outer.
std::vector<std::pair<Point, Point>> placement_pairs(const SweepConfig& config);

// Reference driver: one configuration after another.
void full_sweep_serial(const SweepConfig& config, const ConfigurationSink& sink);

// OpenMP driver. Pairs are evaluated in chunks across `jobs` threads and
// handed to `sink` in the same order as the serial driver, so output is
// identical for any job count. jobs <= 0 uses all available threads.
void full_sweep(const SweepConfig& config, const ConfigurationSink& sink, int jobs = 0);

// A (A-1) (A-2) for A admissible positions.
std::uint64_t placement_count(const SweepConfig& config);

std::string records_csv_header();
std::string to_csv_row(const SweepRecord& record);
// y5_label is the internal label of the probe point (fixed point count + 2).
std::vector<SweepRecord> parse_records_csv(const std::string& text, int y5_label = 4);

}  // namespace dfogeom
