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

#include "dfogeom/core.hpp"

#include <cmath>
#include <set>

namespace dfogeom {

double euclidean_distance(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension()) {
    throw InputError("distance between points of dimension " +
                     std::to_string(p.dimension()) + " and " +
                     std::to_string(q.dimension()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    const double d = p.coords[i] - q.coords[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) return;
  dimension_ = points_.front().dimension();
  if (dimension_ == 0) throw InputError("points must have at least one coordinate");
  std::set<int> labels;
  for (const auto& p : points_) {
    if (p.dimension() != dimension_) {
      throw InputError("point set mixes dimensions " + std::to_string(dimension_) +
                       " and " + std::to_string(p.dimension()));
    }
    for (double c : p.coords) {
      if (!std::isfinite(c)) throw InputError("non-finite coordinate");
    }
    if (!labels.insert(p.label).second) {
      throw InputError("duplicate label " + std::to_string(p.label));
    }
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (euclidean_distance(points_[i], points_[j]) <= kCoincidenceTolerance) {
        throw InputError("points " + std::to_string(points_[i].label) + " and " +
                         std::to_string(points_[j].label) + " coincide");
      }
    }
  }
}

PointSet PointSet::from_coords(const std::vector<std::vector<double>>& coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    pts.emplace_back(coords[i], static_cast<int>(i));
  }
  return PointSet(std::move(pts));
}

std::size_t PointSet::index_of(int label) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].label == label) return i;
  }
  throw InputError("no point with label " + std::to_string(label));
}

Ball::Ball(Point c, double r) : center(std::move(c)), radius(r) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw InputError("ball radius must be finite and nonnegative");
  }
}

bool Ball::contains(const Point& x, double tol) const {
  return euclidean_distance(center, x) <= radius + tol;
}

GridRegion::GridRegion(std::vector<double> lo, std::vector<double> hi, double s)
    : lower(std::move(lo)), upper(std::move(hi)), step(s) {
  validate();
}

void GridRegion::validate() const {
  if (lower.empty() || lower.size() != upper.size()) {
    throw InputError("grid bounds must be nonempty and of equal length");
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw InputError("grid step must be positive");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    // A zero-width axis is the degenerate single-point lattice.
    if (!(lower[i] <= upper[i])) {
      throw InputError("grid lower bound exceeds upper bound on axis " + std::to_string(i));
    }
  }
}

std::size_t GridRegion::count_along(std::size_t axis) const {
  // Guard the floor against representation error, e.g. (0.3 - 0) / 0.1.
  const double span = (upper[axis] - lower[axis]) / step;
  return static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
}

std::size_t GridRegion::lattice_size() const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dimension(); ++i) total *= count_along(i);
  return total;
}

std::vector<Point> enumerate_grid(const GridRegion& region, std::span<const Point> exclusions) {
  region.validate();
  const std::size_t n = region.dimension();
  for (const auto& e : exclusions) {
    if (e.dimension() != n) throw InputError("exclusion point dimension mismatch");
  }
  std::vector<std::size_t> counts(n);
  for (std::size_t i = 0; i < n; ++i) counts[i] = region.count_along(i);

  std::vector<Point> out;
  out.reserve(region.lattice_size());
  std::vector<std::size_t> idx(n, 0);
  int label = 0;
  while (true) {
    Point p;
    p.coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.coords[i] = region.lower[i] + static_cast<double>(idx[i]) * region.step;
    }
    bool excluded = false;
    for (const auto& e : exclusions) {
      if (euclidean_distance(p, e) <= kCoincidenceTolerance) {
        excluded = true;
        break;
      }
    }
    if (!excluded) {
      p.label = label++;
      out.push_back(std::move(p));
    }
    std::size_t axis = 0;
    while (axis < n && ++idx[axis] == counts[axis]) {
      idx[axis] = 0;
      ++axis;
    }
    if (axis == n) break;
  }
  return out;
}

}  // namespace dfogeom
