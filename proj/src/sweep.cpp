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

#include "dfogeom/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dfogeom/io.hpp"
#include "dfogeom/lof.hpp"
#include "dfogeom/poisedness.hpp"

namespace dfogeom {

void SweepConfig::validate() const {
  region.validate();
  if (region.dimension() != 2) throw InputError("sweeps are defined on planar grids only");
  if (!(trap_far_radius > 0.0) || !(trap_near_radius > 0.0)) {
    throw InputError("trap radii must be positive");
  }
  for (const auto& p : fixed_points) {
    if (p.dimension() != region.dimension()) throw InputError("fixed point dimension mismatch");
    for (std::size_t i = 0; i < p.dimension(); ++i) {
      if (p[i] < region.lower[i] || p[i] > region.upper[i]) {
        throw InputError("fixed points must lie inside the grid region");
      }
    }
  }
  std::vector<std::vector<double>> coords;
  for (const auto& p : fixed_points) coords.push_back(p.coords);
  PointSet::from_coords(coords);  // throws on coincident fixed points
  const int k_eff = effective_k();
  if (k_eff < 1 || static_cast<std::size_t>(k_eff) + 1 > set_size()) {
    throw InputError("k = " + std::to_string(k_eff) + " is invalid for " +
                     std::to_string(set_size()) + "-point sets");
  }
  if (basis_mode == BasisMode::Determined) {
    throw InputError("a " + std::to_string(set_size()) +
                     "-point planar set cannot use the determined quadratic basis; use mfn or "
                     "reduced");
  }
  if (basis_mode == BasisMode::ReducedBasis && reduced_basis().size() != set_size()) {
    throw InputError("reduced monomial list must have one monomial per point");
  }
}

int SweepConfig::effective_k() const {
  return k > 0 ? k : static_cast<int>(set_size()) - 2;
}

MonomialBasis SweepConfig::reduced_basis() const {
  if (reduced_monomials.empty()) return default_reduced_basis(region.dimension());
  return MonomialBasis::parse(reduced_monomials, region.dimension());
}

nlohmann::json to_json(const SweepConfig& c) {
  nlohmann::json fixed = nlohmann::json::array();
  for (const auto& p : c.fixed_points) fixed.push_back(p.coords);
  return {
      {"region", {{"lower", c.region.lower}, {"upper", c.region.upper}, {"step", c.region.step}}},
      {"fixed_points", fixed},
      {"k", c.k},
      {"lof_threshold", c.lof_threshold},
      {"basis_mode", to_string(c.basis_mode)},
      {"reduced_monomials", c.reduced_monomials.empty() ? c.reduced_basis().to_string()
                                                        : c.reduced_monomials},
      {"trap_far_radius", c.trap_far_radius},
      {"trap_near_radius", c.trap_near_radius},
  };
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig c;
  try {
    if (j.contains("region")) {
      const auto& r = j.at("region");
      c.region = GridRegion(r.value("lower", c.region.lower), r.value("upper", c.region.upper),
                            r.value("step", c.region.step));
    }
    if (j.contains("fixed_points")) {
      c.fixed_points.clear();
      for (const auto& p : j.at("fixed_points")) {
        c.fixed_points.emplace_back(p.get<std::vector<double>>());
      }
    }
    c.k = j.value("k", c.k);
    c.lof_threshold = j.value("lof_threshold", c.lof_threshold);
    if (j.contains("basis_mode")) c.basis_mode = parse_basis_mode(j.at("basis_mode"));
    c.reduced_monomials = j.value("reduced_monomials", c.reduced_monomials);
    c.trap_far_radius = j.value("trap_far_radius", c.trap_far_radius);
    c.trap_near_radius = j.value("trap_near_radius", c.trap_near_radius);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad sweep config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string point_name(int label) { return "y" + std::to_string(label + 1); }

const char* to_string(SweepState state) {
  switch (state) {
    case SweepState::Both: return "both";
    case SweepState::LambdaOnly: return "lambda";
    case SweepState::LofOnly: return "lof";
    case SweepState::Neither: return "neither";
    case SweepState::Unpoised: return "unpoised";
  }
  return "unknown";
}

SweepState SweepRecord::state() const {
  if (!poised) return SweepState::Unpoised;
  if (both()) return SweepState::Both;
  if (lambda_bad_is_y5()) return SweepState::LambdaOnly;
  if (lof_bad_is_y5()) return SweepState::LofOnly;
  return SweepState::Neither;
}

SweepRecord classify(const SweepConfig& config, const Point& y3, const Point& y4,
                     const Point& y5) {
  std::vector<Point> pts;
  pts.reserve(config.set_size());
  int label = 0;
  for (const auto& p : config.fixed_points) pts.emplace_back(p.coords, label++);
  pts.emplace_back(y3.coords, label++);
  pts.emplace_back(y4.coords, label++);
  pts.emplace_back(y5.coords, label++);
  const PointSet set(std::move(pts));

  SweepRecord rec;
  rec.y3 = y3;
  rec.y4 = y4;
  rec.y5 = y5;
  rec.y3.label = rec.y4.label = rec.y5.label = 0;
  rec.y5_label = config.label_y5();

  LagrangeBasis basis;
  try {
    if (config.basis_mode == BasisMode::ReducedBasis) {
      basis = build_reduced(set, config.reduced_basis());
    } else {
      basis = build_basis(set, config.basis_mode);
    }
  } catch (const NotPoisedError&) {
    rec.poised = false;
    return rec;
  }
  rec.poised = true;
  const int k = config.effective_k();
  rec.lambda_bad = analyze(set, basis, k).bad_point;
  rec.lof_bad = lof_report(set, {k, config.lof_threshold}).bad_point;
  return rec;
}

std::vector<Point> admissible_positions(const SweepConfig& config) {
  return enumerate_grid(config.region, config.fixed_points);
}

ConfigurationResult evaluate_configuration(const SweepConfig& config,
                                           const std::vector<Point>& admissible, const Point& y3,
                                           const Point& y4) {
  ConfigurationResult out;
  out.y3 = Point(y3.coords);
  out.y4 = Point(y4.coords);
  out.records.reserve(admissible.size());
  for (const auto& y5 : admissible) {
    if (y5 == y3 || y5 == y4) continue;
    out.records.push_back(classify(config, out.y3, out.y4, y5));
  }
  return out;
}

std::map<std::vector<double>, SweepRecord> run_example1(const SweepConfig& config, const Point& y3,
                                                        const Point& y4) {
  config.validate();
  const auto admissible = admissible_positions(config);
  auto on_lattice = [&](const Point& p) {
    return std::any_of(admissible.begin(), admissible.end(),
                       [&](const Point& a) { return euclidean_distance(a, p) <= kCoincidenceTolerance; });
  };
  if (y3 == y4) throw InputError("y3 and y4 coincide");
  if (!on_lattice(y3) || !on_lattice(y4)) {
    throw InputError("y3 and y4 must be grid points distinct from the fixed points");
  }
  std::map<std::vector<double>, SweepRecord> out;
  for (auto& rec : evaluate_configuration(config, admissible, y3, y4).records) {
    out.emplace(rec.y5.coords, std::move(rec));
  }
  return out;
}

std::vector<std::pair<Point, Point>> placement_pairs(const SweepConfig& config) {
  const auto admissible = admissible_positions(config);
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(admissible.size() * (admissible.size() > 0 ? admissible.size() - 1 : 0));
  for (const auto& a : admissible) {
    for (const auto& b : admissible) {
      if (a.label != b.label) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

void full_sweep_serial(const SweepConfig& config, const ConfigurationSink& sink) {
  config.validate();
  const auto admissible = admissible_positions(config);
  for (const auto& [y3, y4] : placement_pairs(config)) {
    sink(evaluate_configuration(config, admissible, y3, y4));
  }
}

void full_sweep(const SweepConfig& config, const ConfigurationSink& sink, int jobs) {
  config.validate();
  const auto admissible = admissible_positions(config);
  const auto pairs = placement_pairs(config);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  // Bounded buffer: one chunk of configurations in flight at a time.
  const std::size_t chunk = static_cast<std::size_t>(std::max(1, threads)) * 16;
  std::vector<ConfigurationResult> buffer;
  for (std::size_t start = 0; start < pairs.size(); start += chunk) {
    const std::size_t len = std::min(chunk, pairs.size() - start);
    buffer.assign(len, ConfigurationResult{});
    const auto n = static_cast<std::int64_t>(len);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto& [y3, y4] = pairs[start + static_cast<std::size_t>(i)];
      buffer[static_cast<std::size_t>(i)] = evaluate_configuration(config, admissible, y3, y4);
    }
    for (const auto& result : buffer) sink(result);
  }
}

std::uint64_t placement_count(const SweepConfig& config) {
  const auto a = static_cast<std::uint64_t>(admissible_positions(config).size());
  if (a < 3) return 0;
  return a * (a - 1) * (a - 2);
}

std::string records_csv_header() { return "y3x,y3y,y4x,y4y,y5x,y5y,poised,lambda_bad,lof_bad,state\n"; }

std::string to_csv_row(const SweepRecord& r) {
  std::string s;
  s.reserve(64);
  for (const Point* p : {&r.y3, &r.y4, &r.y5}) {
    s += format_number(p->coords[0]);
    s += ',';
    s += format_number(p->coords[1]);
    s += ',';
  }
  s += r.poised ? "1," : "0,";
  if (r.lambda_bad) s += point_name(*r.lambda_bad);
  s += ',';
  if (r.lof_bad) s += point_name(*r.lof_bad);
  s += ',';
  s += to_string(r.state());
  s += '\n';
  return s;
}

std::vector<SweepRecord> parse_records_csv(const std::string& text, int y5_label) {
  std::istringstream in(text);
  std::string line;
  std::vector<SweepRecord> out;
  bool header = true;
  auto parse_label = [](const std::string& f) -> std::optional<int> {
    if (f.empty()) return std::nullopt;
    if (f.size() < 2 || f[0] != 'y') throw InputError("bad point name '" + f + "'");
    return std::stoi(f.substr(1)) - 1;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      if (line + "\n" != records_csv_header()) throw InputError("not a sweep records CSV");
      header = false;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 10) throw InputError("malformed record row: " + line);
    SweepRecord r;
    r.y3 = Point{std::stod(f[0]), std::stod(f[1])};
    r.y4 = Point{std::stod(f[2]), std::stod(f[3])};
    r.y5 = Point{std::stod(f[4]), std::stod(f[5])};
    r.poised = f[6] == "1";
    r.lambda_bad = parse_label(f[7]);
    r.lof_bad = parse_label(f[8]);
    r.y5_label = y5_label;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace dfogeom
