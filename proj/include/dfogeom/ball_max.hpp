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

#include "dfogeom/core.hpp"
#include "dfogeom/lagrange.hpp"

namespace dfogeom {

enum class Attainment { Interior, Boundary };

const char* to_string(Attainment side);

struct BallExtremum {
  double max_abs_value = 0.0;
  Point argmax;
  Attainment attained_on = Attainment::Boundary;
};

// Global maximum of |q| over the closed ball. In the plane the boundary
// critical points are the unit-circle roots of a quartic derived from the
// restriction of q to the circle; in higher dimension both the minimum and
// the maximum of q are taken from the trust-region subproblem solved through
// a full eigendecomposition (including the hard case).
//
// When an interior and a boundary candidate tie, the boundary point with the
// lexicographically smallest coordinates wins. A zero radius returns the
// center.
BallExtremum max_abs_over_ball(const QuadraticPolynomial& q, const Ball& ball);

// Lower bound on max |q| from a regular samples_per_axis^n lattice over the
// bounding box clipped to the ball, plus (in the plane) 4 * samples_per_axis
// equally spaced boundary points.
double sampled_max_abs(const QuadraticPolynomial& q, const Ball& ball, int samples_per_axis);

// Upper bound on ||grad q|| over the ball.
double gradient_bound(const QuadraticPolynomial& q, const Ball& ball);

// Bound on max_abs_over_ball - sampled_max_abs for planar balls:
// gradient_bound * (lattice half-diagonal + boundary half-chord).
double sampling_gap_bound(const QuadraticPolynomial& q, const Ball& ball, int samples_per_axis);

namespace detail {

// Minimizer of u^T H u + g^T u over ||u|| <= 1 by the eigen/secular route.
// Exposed for tests; any dimension.
Eigen::VectorXd minimize_on_unit_ball(const Eigen::MatrixXd& H, const Eigen::VectorXd& g);

}  // namespace detail

}  // namespace dfogeom
