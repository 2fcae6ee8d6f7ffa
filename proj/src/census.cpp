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

#include "dfogeom/census.hpp"

#include <algorithm>
#include <cmath>

#include "dfogeom/io.hpp"

namespace dfogeom {

namespace {

nlohmann::json row_json(const TrapRow& row) {
  return {{"outliers", row.outliers}, {"traps", row.traps}, {"rate", round_sig10(row.rate())}};
}

nlohmann::json point_json(const Point& p) {
  nlohmann::json out = nlohmann::json::array();
  for (double c : p.coords) out.push_back(round_sig10(c));
  return out;
}

std::vector<Point> placed_points(const SweepConfig& config, const ConfigurationResult& result) {
  std::vector<Point> pts;
  int label = 0;
  for (const auto& p : config.fixed_points) pts.emplace_back(p.coords, label++);
  pts.emplace_back(result.y3.coords, label++);
  pts.emplace_back(result.y4.coords, label++);
  return pts;
}

}  // namespace

nlohmann::json to_json(const TrapCensus& c) {
  return {{"far_radius", round_sig10(c.far_radius)},
          {"near_radius", round_sig10(c.near_radius)},
          {"y3", row_json(c.y3)},
          {"y4", row_json(c.y4)},
          {"total", row_json(c.total)}};
}

FocalStatus focal_status(const SweepConfig& config, const ConfigurationResult& result, int focal,
                         double far_radius, double near_radius) {
  const auto pts = placed_points(config, result);
  const std::size_t focal_index = config.fixed_points.size() + static_cast<std::size_t>(focal);
  const Point& center = pts[focal_index];
  FocalStatus st;
  st.outlier = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i != focal_index && euclidean_distance(pts[i], center) <= far_radius) {
      st.outlier = false;
      break;
    }
  }
  if (!st.outlier) return st;
  for (const auto& r : result.records) {
    if (r.lambda_bad_is_y5() && euclidean_distance(r.y5, center) <= near_radius) {
      st.trap = true;
      break;
    }
  }
  return st;
}

TrapCensusAccumulator::TrapCensusAccumulator(SweepConfig config, double far_radius,
                                             double near_radius)
    : config_(std::move(config)) {
  census_.far_radius = far_radius;
  census_.near_radius = near_radius;
}

void TrapCensusAccumulator::add(const ConfigurationResult& result) {
  for (int focal = 0; focal < 2; ++focal) {
    const auto st =
        focal_status(config_, result, focal, census_.far_radius, census_.near_radius);
    TrapRow& row = focal == 0 ? census_.y3 : census_.y4;
    row.outliers += st.outlier;
    row.traps += st.trap;
    census_.total.outliers += st.outlier;
    census_.total.traps += st.trap;
  }
}

std::vector<ConfigurationResult> group_by_configuration(const std::vector<SweepRecord>& records) {
  std::vector<ConfigurationResult> out;
  for (const auto& r : records) {
    if (out.empty() || !(out.back().y3 == r.y3) || !(out.back().y4 == r.y4)) {
      out.push_back({r.y3, r.y4, {}});
    }
    out.back().records.push_back(r);
  }
  return out;
}

TrapCensus trap_census(const std::vector<SweepRecord>& records, const SweepConfig& config) {
  return trap_census(records, config, config.trap_far_radius, config.trap_near_radius);
}

TrapCensus trap_census(const std::vector<SweepRecord>& records, const SweepConfig& config,
                       double far_radius, double near_radius) {
  TrapCensusAccumulator acc(config, far_radius, near_radius);
  for (const auto& group : group_by_configuration(records)) acc.add(group);
  return acc.census();
}

double Conjecture1Report::counterexample_fraction() const {
  return hypothesis_count == 0 ? 0.0
                               : static_cast<double>(hypothesis_count - satisfied_count) /
                                     static_cast<double>(hypothesis_count);
}

nlohmann::json to_json(const Conjecture1Report& r) {
  nlohmann::json ce = nlohmann::json::array();
  for (const auto& [y3, y4] : r.counterexamples) {
    ce.push_back({{"y3", point_json(y3)}, {"y4", point_json(y4)}});
  }
  return {{"conjecture", 1},
          {"configurations", r.configurations},
          {"hypothesis_count", r.hypothesis_count},
          {"satisfied_count", r.satisfied_count},
          {"counterexample_count", r.hypothesis_count - r.satisfied_count},
          {"counterexample_fraction", round_sig10(r.counterexample_fraction())},
          {"counterexamples", ce}};
}

void Conjecture1Checker::add(const ConfigurationResult& result) {
  ++report_.configurations;
  const auto st =
      focal_status(config_, result, 1, config_.trap_far_radius, config_.trap_near_radius);
  if (!st.outlier) return;
  ++report_.hypothesis_count;
  if (st.trap) {
    ++report_.satisfied_count;
  } else {
    report_.counterexamples.emplace_back(result.y3, result.y4);
  }
}

Conjecture1Report check_conjecture_1(const SweepConfig& config, int jobs) {
  Conjecture1Checker checker(config);
  full_sweep(config, [&](const ConfigurationResult& r) { checker.add(r); }, jobs);
  return checker.report();
}

const char* to_string(LineReading reading) {
  return reading == LineReading::ThroughPoints ? "through_points" : "through_origin";
}

LineReading parse_line_reading(const std::string& text) {
  if (text == "through_points") return LineReading::ThroughPoints;
  if (text == "through_origin") return LineReading::ThroughOrigin;
  throw InputError("unknown line reading '" + text + "' (expected through_points or through_origin)");
}

namespace {

double cross(double ux, double uy, double vx, double vy) { return ux * vy - uy * vx; }

bool collinear(const Point& a, const Point& b, const Point& c) {
  const double ux = b[0] - a[0], uy = b[1] - a[1];
  const double vx = c[0] - a[0], vy = c[1] - a[1];
  return std::abs(cross(ux, uy, vx, vy)) <= 1e-9 * std::hypot(ux, uy) * std::hypot(vx, vy);
}

}  // namespace

std::vector<CollinearLine> collinear_lines(const std::vector<Point>& points) {
  std::vector<CollinearLine> lines;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<int> members{points[i].label, points[j].label};
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j && collinear(points[i], points[j], points[k])) {
          members.push_back(points[k].label);
        }
      }
      if (members.size() < 3) continue;
      std::sort(members.begin(), members.end());
      const bool seen = std::any_of(lines.begin(), lines.end(),
                                    [&](const CollinearLine& l) { return l.members == members; });
      if (seen) continue;
      lines.push_back({points[i], {points[j][0] - points[i][0], points[j][1] - points[i][1]},
                       members});
    }
  }
  return lines;
}

bool on_line(const CollinearLine& line, const Point& x, LineReading reading) {
  const double ax = reading == LineReading::ThroughPoints ? line.anchor[0] : 0.0;
  const double ay = reading == LineReading::ThroughPoints ? line.anchor[1] : 0.0;
  const double dx = line.direction[0], dy = line.direction[1];
  const double norm = std::hypot(dx, dy);
  const double rx = x[0] - ax, ry = x[1] - ay;
  if (reading == LineReading::ThroughOrigin && std::hypot(rx, ry) <= 1e-9) return false;  // t != 0
  return std::abs(cross(rx, ry, dx, dy)) <= 1e-9 * norm;
}

double Conjecture2Report::satisfaction_rate() const {
  return hypothesis_count == 0 ? 0.0
                               : static_cast<double>(satisfied_count) /
                                     static_cast<double>(hypothesis_count);
}

nlohmann::json to_json(const Conjecture2Instance& inst) {
  nlohmann::json members = nlohmann::json::array();
  for (int m : inst.line.members) members.push_back(point_name(m));
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& p : inst.lambda_bad_on_line) bad.push_back(point_json(p));
  return {{"y3", point_json(inst.y3)},
          {"y4", point_json(inst.y4)},
          {"collinear", members},
          {"anchor", point_json(inst.line.anchor)},
          {"direction", point_json(Point(inst.line.direction))},
          {"probes_on_line", inst.probes_on_line},
          {"poised_on_line", inst.poised_on_line},
          {"lambda_bad_on_line", bad},
          {"satisfied", inst.satisfied()}};
}

nlohmann::json to_json(const Conjecture2Report& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& inst : r.violations) v.push_back(to_json(inst));
  return {{"conjecture", 2},
          {"line_reading", to_string(r.reading)},
          {"configurations", r.configurations},
          {"hypothesis_count", r.hypothesis_count},
          {"satisfied_count", r.satisfied_count},
          {"vacuous_count", r.vacuous_count},
          {"satisfaction_rate", round_sig10(r.satisfaction_rate())},
          {"counterexamples", v}};
}

std::vector<Conjecture2Instance> conjecture2_instances(const SweepConfig& config,
                                                       const ConfigurationResult& result,
                                                       LineReading reading) {
  std::vector<Conjecture2Instance> out;
  for (auto& line : collinear_lines(placed_points(config, result))) {
    Conjecture2Instance inst;
    inst.y3 = result.y3;
    inst.y4 = result.y4;
    inst.line = std::move(line);
    for (const auto& r : result.records) {
      if (!on_line(inst.line, r.y5, reading)) continue;
      ++inst.probes_on_line;
      if (r.poised) ++inst.poised_on_line;
      if (r.lambda_bad_is_y5()) inst.lambda_bad_on_line.push_back(r.y5);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

Conjecture2Checker::Conjecture2Checker(SweepConfig config, LineReading reading)
    : config_(std::move(config)) {
  report_.reading = reading;
}

void Conjecture2Checker::add(const ConfigurationResult& result) {
  ++report_.configurations;
  for (auto& inst : conjecture2_instances(config_, result, report_.reading)) {
    ++report_.hypothesis_count;
    if (inst.vacuous()) ++report_.vacuous_count;
    if (inst.satisfied()) {
      ++report_.satisfied_count;
    } else {
      report_.violations.push_back(std::move(inst));
    }
  }
}

Conjecture2Report check_conjecture_2(const SweepConfig& config, LineReading reading, int jobs) {
  Conjecture2Checker checker(config, reading);
  full_sweep(config, [&](const ConfigurationResult& r) { checker.add(r); }, jobs);
  return checker.report();
}

}  // namespace dfogeom
