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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfogeom {

// Two points coincide when their distance is at most this.
inline constexpr double kCoincidenceTolerance = 1e-12;

// Malformed input: dimension mismatch, out-of-range parameter, bad file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The interpolation system for a point set is singular or numerically so.
class NotPoisedError : public std::runtime_error {
 public:
  NotPoisedError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

struct Point {
  std::vector<double> coords;
  int label = 0;

  Point() = default;
  Point(std::vector<double> c, int l = 0) : coords(std::move(c)), label(l) {}
  Point(std::initializer_list<double> c) : coords(c) {}

  std::size_t dimension() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }

  // Coordinate equality; labels are ignored.
  friend bool operator==(const Point& a, const Point& b) {
    return a.coords == b.coords;
  }
};

double euclidean_distance(const Point& p, const Point& q);

// Ordered interpolation set Y = {y0, ..., yp}. Construction validates the
// shared dimension, label uniqueness and pairwise distinctness.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  // Labels assigned by position, starting at 0.
  static PointSet from_coords(const std::vector<std::vector<double>>& coords);

  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return dimension_; }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  // Position of the point carrying `label`; throws InputError if absent.
  std::size_t index_of(int label) const;

 private:
  std::vector<Point> points_;
  std::size_t dimension_ = 0;
};

struct Ball {
  Point center;
  double radius = 0.0;

  Ball() = default;
  Ball(Point c, double r);
  bool contains(const Point& x, double tol = 1e-9) const;
};

// Axis-aligned lattice: lower[i] + j * step for j = 0 .. floor((upper-lower)/step).
struct GridRegion {
  std::vector<double> lower;
  std::vector<double> upper;
  double step = 1.0;

  GridRegion() = default;
  GridRegion(std::vector<double> lo, std::vector<double> hi, double s);

  std::size_t dimension() const { return lower.size(); }
  std::size_t count_along(std::size_t axis) const;
  std::size_t lattice_size() const;
  void validate() const;
};

// Lattice points in row-major order with axis 0 varying fastest. Points that
// coincide with any exclusion are skipped. Output labels are sequential.
std::vector<Point> enumerate_grid(const GridRegion& region,
                                  std::span<const Point> exclusions = {});

// Reads `x1,x2,...,xn` header CSV; labels follow row order from 0.
PointSet load_points_csv(const std::string& path);
PointSet parse_points_csv(const std::string& text);

}  // namespace dfogeom
