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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dfogeom/core.hpp"
#include "dfogeom/io.hpp"

using namespace dfogeom;

TEST_CASE("euclidean distance values") {
  CHECK(euclidean_distance({0.0, 0.0}, {0.0, 0.0}) == 0.0);
  CHECK(euclidean_distance({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(euclidean_distance({2.0, 0.0}, {0.0, 2.0}) == doctest::Approx(2.8284271247461903).epsilon(1e-15));
  CHECK_THROWS_AS(euclidean_distance({1.0, 0.0}, {1.0, 0.0, 0.0}), InputError);
}

TEST_CASE("triangle inequality and symmetry on random triples") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> N(0.0, 3.0);
  for (int t = 0; t < 2000; ++t) {
    Point a{N(rng), N(rng), N(rng)}, b{N(rng), N(rng), N(rng)}, c{N(rng), N(rng), N(rng)};
    CHECK(euclidean_distance(a, c) <= euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-12);
    CHECK(euclidean_distance(a, b) == euclidean_distance(b, a));
  }
}

TEST_CASE("point set validation") {
  CHECK_NOTHROW(PointSet::from_coords({{0, 0}, {1, 0}}));
  CHECK_THROWS_AS(PointSet::from_coords({{0, 0}, {0, 0}}), InputError);
  CHECK_THROWS_AS(PointSet::from_coords({{0, 0}, {1, 0, 0}}), InputError);
  CHECK_THROWS_AS(PointSet::from_coords({{0, NAN}}), InputError);
  CHECK_THROWS_AS(PointSet({Point({0.0, 0.0}, 1), Point({1.0, 0.0}, 1)}), InputError);
  const auto s = PointSet({Point({0.0, 0.0}, 7), Point({1.0, 0.0}, 3)});
  CHECK(s.index_of(3) == 1);
  CHECK_THROWS_AS(s.index_of(4), InputError);
}

TEST_CASE("ball radius must be nonnegative") {
  CHECK_NOTHROW(Ball(Point{0.0, 0.0}, 0.0));
  CHECK_THROWS_AS(Ball(Point{0.0, 0.0}, -1.0), InputError);
  Ball b(Point{0.0, 0.0}, 1.0);
  CHECK(b.contains(Point{1.0, 0.0}));
  CHECK_FALSE(b.contains(Point{1.1, 0.0}));
}

TEST_CASE("grid enumeration counts") {
  GridRegion r({-5, -5}, {5, 5}, 1.0);
  CHECK(r.lattice_size() == 121);
  CHECK(enumerate_grid(r).size() == 121);
  std::vector<Point> ex{Point{-1.0, 0.0}, Point{1.0, 0.0}};
  CHECK(enumerate_grid(r, ex).size() == 119);

  GridRegion degenerate({0, 0}, {0, 0}, 1.0);
  const auto one = enumerate_grid(degenerate);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Point{0.0, 0.0});

  GridRegion coarse({-5, -5}, {5, 5}, 2.0);
  CHECK(coarse.lattice_size() == 36);
  // (-1,0) is not on the step-2 lattice, so nothing is excluded.
  CHECK(enumerate_grid(coarse, ex).size() == 36);

  CHECK_THROWS_AS(GridRegion({1, 0}, {0, 0}, 1.0).validate(), InputError);
  CHECK_THROWS_AS(GridRegion({0, 0}, {1, 1}, 0.0).validate(), InputError);
}

TEST_CASE("grid ordering is row-major with axis 0 fastest and deterministic") {
  GridRegion r({0, 0}, {2, 1}, 1.0);
  const auto g = enumerate_grid(r);
  REQUIRE(g.size() == 6);
  CHECK(g[0] == Point{0.0, 0.0});
  CHECK(g[1] == Point{1.0, 0.0});
  CHECK(g[2] == Point{2.0, 0.0});
  CHECK(g[3] == Point{0.0, 1.0});
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i].label == static_cast<int>(i));
  CHECK(enumerate_grid(r) == g);
}

TEST_CASE("grid size equals closed form minus excluded lattice points") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> U(-4, 4);
  GridRegion r({-3, -2}, {3, 4}, 1.0);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point> ex;
    for (int i = 0; i < 5; ++i) ex.push_back(Point{double(U(rng)), double(U(rng))});
    std::size_t inside = 0;
    std::vector<Point> uniq;
    for (const auto& p : ex) {
      if (std::find(uniq.begin(), uniq.end(), p) != uniq.end()) continue;
      uniq.push_back(p);
      inside += p[0] >= -3 && p[0] <= 3 && p[1] >= -2 && p[1] <= 4;
    }
    CHECK(enumerate_grid(r, ex).size() == r.lattice_size() - inside);
  }
}

TEST_CASE("point csv parsing") {
  const auto s = parse_points_csv("x1,x2\n0,0\n1, 0\n0,1\n");
  REQUIRE(s.size() == 3);
  CHECK(s.dimension() == 2);
  CHECK(s[1].label == 1);
  CHECK(s[1][0] == 1.0);
  CHECK_THROWS_AS(parse_points_csv("a,b\n0,0\n"), InputError);
  CHECK_THROWS_AS(parse_points_csv("x1,x2\n0,zz\n"), InputError);
  CHECK_THROWS_AS(parse_points_csv("x1,x2\n0\n"), InputError);
}

TEST_CASE("number formatting uses ten significant digits") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(std::sqrt(2.0)) == "1.414213562");
  CHECK(round_sig10(1.23456789012345) == 1.234567890);
}
