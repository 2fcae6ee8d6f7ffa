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

// Test-only reference computations. Nothing here calls into the library's
// LOF, basis or ball solvers, so agreement is a genuine cross-check.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using Pts = std::vector<std::vector<double>>;

inline double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// k-distance straight from the two clauses: some object o with at least k
// objects within d(p,o) and at most k-1 strictly closer.
inline double k_distance(const Pts& D, std::size_t p, int k) {
  for (std::size_t o = 0; o < D.size(); ++o) {
    if (o == p) continue;
    const double d = dist(D[p], D[o]);
    int le = 0, lt = 0;
    for (std::size_t q = 0; q < D.size(); ++q) {
      if (q == p) continue;
      const double e = dist(D[p], D[q]);
      le += e <= d;
      lt += e < d;
    }
    if (le >= k && lt <= k - 1) return d;
  }
  return NAN;
}

inline std::vector<std::size_t> neighborhood(const Pts& D, std::size_t p, int k) {
  const double kd = k_distance(D, p, k);
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < D.size(); ++q) {
    if (q != p && dist(D[p], D[q]) <= kd) out.push_back(q);
  }
  return out;
}

inline double reach_dist(const Pts& D, std::size_t p, std::size_t o, int k) {
  return std::max(k_distance(D, o, k), dist(D[p], D[o]));
}

inline double lrd(const Pts& D, std::size_t p, int k) {
  const auto N = neighborhood(D, p, k);
  double s = 0.0;
  for (auto o : N) s += reach_dist(D, p, o, k);
  return 1.0 / (s / static_cast<double>(N.size()));
}

inline double lof(const Pts& D, std::size_t p, int k) {
  const auto N = neighborhood(D, p, k);
  const double mine = lrd(D, p, k);
  double s = 0.0;
  for (auto o : N) s += lrd(D, o, k) / mine;
  return s / static_cast<double>(N.size());
}

// Minimum-Frobenius-norm quadratic interpolant for planar points, solved in
// raw coordinates over the unknowns (A11, A12, A21, A22, b1, b2, c) with the
// symmetry A12 = A21 imposed as a constraint and the objective sum of all
// four A entries squared. Dense KKT, full-pivot LU.
struct Quad {
  Eigen::Matrix2d A;
  Eigen::Vector2d b;
  double c;
  double operator()(double x, double y) const {
    Eigen::Vector2d v(x, y);
    return v.dot(A * v) + b.dot(v) + c;
  }
};

inline Quad mfn_interpolant(const Pts& Y, const std::vector<double>& f) {
  const int m = static_cast<int>(Y.size());
  const int nz = 7, nc = m + 1;
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(nc, nz);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nc);
  for (int j = 0; j < m; ++j) {
    const double x = Y[j][0], y = Y[j][1];
    E.row(j) << x * x, x * y, y * x, y * y, x, y, 1.0;
    rhs[j] = f[j];
  }
  E(m, 1) = 1.0;
  E(m, 2) = -1.0;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(nz, nz);
  for (int i = 0; i < 4; ++i) P(i, i) = 1.0;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(nz + nc, nz + nc);
  K.topLeftCorner(nz, nz) = P;
  K.topRightCorner(nz, nc) = E.transpose();
  K.bottomLeftCorner(nc, nz) = E;
  Eigen::VectorXd r = Eigen::VectorXd::Zero(nz + nc);
  r.tail(nc) = rhs;
  // The A block of P is only semidefinite on the (b, c) directions; the
  // system stays nonsingular when the points are affinely poised.
  const Eigen::VectorXd z = K.fullPivLu().solve(r);
  Quad q;
  q.A << z[0], z[1], z[2], z[3];
  q.b << z[4], z[5];
  q.c = z[6];
  return q;
}

inline Pts random_points(std::mt19937_64& rng, int count, int dim, double lo = -1.0,
                         double hi = 1.0) {
  std::uniform_real_distribution<double> U(lo, hi);
  Pts out(count, std::vector<double>(dim));
  for (auto& p : out) {
    for (auto& c : p) c = U(rng);
  }
  return out;
}

}  // namespace oracle
