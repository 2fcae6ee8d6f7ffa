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

#include <optional>
#include <vector>

#include "dfogeom/core.hpp"

namespace dfogeom {

struct LofParams {
  int min_pts = 1;
  double bad_threshold = 1.2;

  void validate(std::size_t set_size) const;
};

struct LofEntry {
  int label = 0;
  double k_distance = 0.0;
  std::vector<int> neighborhood;  // labels, ascending distance then label
  double lrd = 0.0;
  double lof = 0.0;
};

struct LofReport {
  LofParams params;
  std::vector<LofEntry> entries;  // in point-set order
  std::optional<int> bad_point;
};

// Local outlier factors of every point of a set for one MinPts value.
// Neighborhoods keep all tied points, so |N_k(p)| may exceed k; lrd and LOF
// average over the actual neighborhood size.
class LofModel {
 public:
  LofModel(const PointSet& set, int min_pts);

  int min_pts() const { return k_; }
  std::size_t size() const { return k_distance_.size(); }

  // Position-based accessors (index into the point set, not label).
  double distance(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  double k_distance(std::size_t i) const { return k_distance_[i]; }
  const std::vector<std::size_t>& neighborhood(std::size_t i) const { return neighbors_[i]; }
  double reach_dist(std::size_t p, std::size_t o) const;
  double lrd(std::size_t i) const { return lrd_[i]; }
  double lof(std::size_t i) const { return lof_[i]; }

  LofReport report(const PointSet& set, double bad_threshold) const;

 private:
  int k_;
  std::vector<double> dist_;
  std::vector<double> k_distance_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<double> lrd_;
  std::vector<double> lof_;
};

// Label-based operations. `p`, `o`, `tau` are point labels.
double k_distance(const PointSet& set, int p, int k);
std::vector<int> neighborhood(const PointSet& set, int p, int k);
double reach_dist(const PointSet& set, int p, int o, int k);
double lrd(const PointSet& set, int p, const LofParams& params);
double lof(const PointSet& set, int p, const LofParams& params);

// Simplified expression for MinPts = p - 1 on a set y0..yp, with D_j the
// largest distance from y_j to any set point:
//   LOF(tau) = 1/(p-1) * sum_{i in 1..p, i != tau} S_tau / S_i,
//   S_x = sum_{j in 1..p, j != x} D_j.
// Indices follow labels 1..p as written; y0 enters only through D_j. It is
// not exact in general; compare against lof() with min_pts = p - 1.
double lof_closed_form(const PointSet& set, int tau);

// Label of the largest LOF if it exceeds the threshold; ties go to the
// smallest label.
std::optional<int> bad_point_lof(const PointSet& set, const LofParams& params);

LofReport lof_report(const PointSet& set, const LofParams& params);

// Index of the largest value, breaking near ties (relative 1e-12) toward the
// smallest label.
std::size_t argmax_smallest_label(const std::vector<double>& values, const std::vector<int>& labels);

}  // namespace dfogeom
