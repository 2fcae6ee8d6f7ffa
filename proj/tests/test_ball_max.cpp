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

#include <cmath>
#include <random>

#include "dfogeom/ball_max.hpp"
#include "dfogeom/table1.hpp"

using namespace dfogeom;

namespace {

QuadraticPolynomial quad(double a11, double a12, double a22, double b1, double b2, double c) {
  Eigen::Matrix2d A;
  A << a11, a12, a12, a22;
  return QuadraticPolynomial(A, Eigen::Vector2d(b1, b2), c);
}

QuadraticPolynomial random_quad(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> N(0.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = N(rng);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b[i] = N(rng);
  return QuadraticPolynomial(A, b, N(rng));
}

}  // namespace

TEST_CASE("radially symmetric and linear examples") {
  const auto q = quad(1, 0, 1, 0, 0, 0);
  for (double r : {0.5, 1.0, 3.0}) {
    const auto e = max_abs_over_ball(q, Ball(Point{0.0, 0.0}, r));
    CHECK(e.max_abs_value == doctest::Approx(r * r).epsilon(1e-12));
    CHECK(e.attained_on == Attainment::Boundary);
  }
  const auto lin = quad(0, 0, 0, 3, -4, 0);
  const auto e = max_abs_over_ball(lin, Ball(Point{0.0, 0.0}, 2.0));
  CHECK(e.max_abs_value == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("l5 over the ball at (0,2) of radius 2") {
  const auto basis = build_determined(six_point_example());
  const Ball ball(Point{0.0, 2.0}, 2.0);
  const auto e = max_abs_over_ball(basis[5], ball);
  CHECK(e.max_abs_value == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(std::abs(e.argmax[0]) < 1e-8);
  CHECK(std::abs(e.argmax[1] - 4.0) < 1e-8);
  CHECK(e.attained_on == Attainment::Boundary);
  CHECK(std::abs(sampled_max_abs(basis[5], ball, 400) - 6.0) <= 0.01);
}

TEST_CASE("sampled oracle examples") {
  const auto q = quad(1, 0, 1, 0, 0, 0);
  CHECK(std::abs(sampled_max_abs(q, Ball(Point{0.0, 0.0}, 1.0), 400) - 1.0) <= 0.01);
  const auto p = quad(0.3, 1.0, -2.0, 0.5, 0.1, -0.7);
  CHECK(sampled_max_abs(p, Ball(Point{1.0, 2.0}, 0.0), 10) ==
        doctest::Approx(std::abs(p(Eigen::Vector2d(1.0, 2.0)))));
}

TEST_CASE("radius zero returns the center value") {
  const auto p = quad(0.3, 1.0, -2.0, 0.5, 0.1, -0.7);
  const auto e = max_abs_over_ball(p, Ball(Point{1.0, 2.0}, 0.0));
  CHECK(e.max_abs_value == doctest::Approx(std::abs(p(Eigen::Vector2d(1.0, 2.0)))));
  CHECK(e.argmax == Point{1.0, 2.0});
}

TEST_CASE("input validation") {
  const auto p = quad(NAN, 0, 0, 0, 0, 0);
  CHECK_THROWS_AS(max_abs_over_ball(p, Ball(Point{0.0, 0.0}, 1.0)), InputError);
  const auto q = quad(1, 0, 0, 0, 0, 0);
  CHECK_THROWS_AS(max_abs_over_ball(q, Ball(Point{0.0, 0.0, 0.0}, 1.0)), InputError);
}

TEST_CASE("interior extremum is found") {
  // 5 - |x|^2 peaks at the centre; the rim only reaches 4.
  const auto q = quad(-1, 0, -1, 0, 0, 5);
  const auto e = max_abs_over_ball(q, Ball(Point{0.0, 0.0}, 1.0));
  CHECK(e.max_abs_value == doctest::Approx(5.0));
  CHECK(e.attained_on == Attainment::Interior);
}

TEST_CASE("exact solver dominates dense sampling on random 2-D problems") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> N(0.0, 2.0);
  std::uniform_real_distribution<double> R(0.05, 4.0);
  for (int t = 0; t < 200; ++t) {
    const auto q = random_quad(rng, 2);
    const Ball ball(Point{N(rng), N(rng)}, R(rng));
    const auto e = max_abs_over_ball(q, ball);
    const double s = sampled_max_abs(q, ball, 200);
    CHECK(s <= e.max_abs_value + 1e-9);
    CHECK(e.max_abs_value - s <= sampling_gap_bound(q, ball, 200) + 1e-9);
    CHECK(ball.contains(e.argmax));
    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(e.argmax.coords.data(), 2);
    CHECK(std::abs(std::abs(q(x)) - e.max_abs_value) <= 1e-9 * (1.0 + e.max_abs_value));
  }
}

TEST_CASE("scale equivariance") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> C(0.2, 5.0);
  for (int t = 0; t < 200; ++t) {
    const auto q = random_quad(rng, 2);
    const double c = C(rng);
    // q(x / c) over the c-scaled ball equals q over the original ball.
    const auto scaled = q.compose_affine(Eigen::Vector2d::Zero(), c);
    const Ball ball(Point{0.3, -0.4}, 1.3);
    const Ball big(Point{0.3 * c, -0.4 * c}, 1.3 * c);
    const double a = max_abs_over_ball(q, ball).max_abs_value;
    const double b = max_abs_over_ball(scaled, big).max_abs_value;
    CHECK(std::abs(a - b) <= 1e-8 * (1.0 + a));
  }
}

TEST_CASE("planar problem embedded in 3-D gives the same maximum") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto q = random_quad(rng, 2);
    Eigen::MatrixXd A3 = Eigen::MatrixXd::Zero(3, 3);
    A3.topLeftCorner(2, 2) = q.A();
    Eigen::VectorXd b3 = Eigen::VectorXd::Zero(3);
    b3.head(2) = q.b();
    const QuadraticPolynomial q3(A3, b3, q.c());
    const double two = max_abs_over_ball(q, Ball(Point{0.5, -1.0}, 1.7)).max_abs_value;
    const double three = max_abs_over_ball(q3, Ball(Point{0.5, -1.0, 2.0}, 1.7)).max_abs_value;
    CHECK(std::abs(two - three) <= 1e-8 * (1.0 + two));
  }
}

TEST_CASE("general dimension path against random sampling") {
  std::mt19937_64 rng(24);
  std::normal_distribution<double> N(0.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + t % 3;
    const auto q = random_quad(rng, n);
    std::vector<double> c(n);
    for (auto& v : c) v = N(rng);
    const Ball ball(Point(c), 1.5);
    const auto e = max_abs_over_ball(q, ball);
    CHECK(ball.contains(e.argmax));
    double best = 0.0;
    for (int s = 0; s < 20000; ++s) {
      Eigen::VectorXd d(n);
      for (int i = 0; i < n; ++i) d[i] = N(rng);
      d *= 1.5 * std::pow(std::uniform_real_distribution<double>(0, 1)(rng), 1.0 / n) / d.norm();
      const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(c.data(), n) + d;
      best = std::max(best, std::abs(q(x)));
    }
    CHECK(best <= e.max_abs_value + 1e-9);
  }
}

TEST_CASE("unit ball minimizer handles the hard case") {
  Eigen::Matrix2d H;
  H << -1, 0, 0, 1;
  // Gradient orthogonal to the most negative eigenvector.
  const Eigen::VectorXd x = detail::minimize_on_unit_ball(H, Eigen::Vector2d(0.0, 0.5));
  CHECK(x.norm() == doctest::Approx(1.0).epsilon(1e-9));
  const double val = x.dot(H * x) + 0.5 * x[1];
  // On the rim the objective is -1 + 2 x2^2 + x2 / 2, minimal at x2 = -1/8.
  CHECK(val == doctest::Approx(-1.03125).epsilon(1e-9));
  CHECK(x[1] == doctest::Approx(-0.125).epsilon(1e-7));
}
