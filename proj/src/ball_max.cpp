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

#include "dfogeom/ball_max.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace dfogeom {

const char* to_string(Attainment side) {
  return side == Attainment::Interior ? "interior" : "boundary";
}

namespace {

// Shifted problem on the unit ball: x = center + r u,
// h(u) = u^T H u + g^T u + h0 with H = r^2 A, g = r (2 A m + b), h0 = q(m).
struct UnitProblem {
  Eigen::MatrixXd H;
  Eigen::VectorXd g;
  double h0 = 0.0;

  double operator()(const Eigen::VectorXd& u) const { return u.dot(H * u) + g.dot(u) + h0; }
};

struct Candidate {
  Eigen::VectorXd u;
  bool boundary = false;
};

void add_interior_stationary(const UnitProblem& p, std::vector<Candidate>& out) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(p.H);
  const Eigen::VectorXd& lam = eig.eigenvalues();
  const Eigen::MatrixXd& Q = eig.eigenvectors();
  const Eigen::VectorXd gt = Q.transpose() * p.g;
  const double scale = std::max({lam.cwiseAbs().maxCoeff(), p.g.norm(), 1e-300});
  const double tol = 1e-13 * scale;
  Eigen::VectorXd ut = Eigen::VectorXd::Zero(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (std::abs(lam[i]) > tol) {
      ut[i] = -gt[i] / (2.0 * lam[i]);
    } else if (std::abs(gt[i]) > tol) {
      return;  // linear growth along a flat direction: no stationary point
    }
  }
  Eigen::VectorXd u = Q * ut;
  const double norm = u.norm();
  if (norm < 1.0 - 1e-12) {
    out.push_back({std::move(u), false});
  } else if (norm <= 1.0) {
    out.push_back({std::move(u), true});
  }
}

// Critical points of t -> h(cos t, sin t). With z = e^{it}, z^2 h'(t) is
//   (beta - i alpha)/2 z^4 + (delta - i gamma)/2 z^3 + (delta + i gamma)/2 z
//   + (beta + i alpha)/2
// where alpha = a22 - a11, beta = 2 a12, gamma = -g1, delta = g2. Every root
// argument (on or off the circle) becomes a candidate angle.
void add_circle_critical_points(const UnitProblem& p, std::vector<Candidate>& out) {
  using cd = std::complex<double>;
  const double a11 = p.H(0, 0), a12 = p.H(0, 1), a22 = p.H(1, 1);
  const double g1 = p.g[0], g2 = p.g[1];
  const double alpha = a22 - a11, beta = 2.0 * a12, gamma = -g1, delta = g2;
  // Ascending powers z^0 .. z^4.
  std::vector<cd> coef = {cd(beta, alpha) / 2.0, cd(delta, gamma) / 2.0, cd(0.0, 0.0),
                          cd(delta, -gamma) / 2.0, cd(beta, -alpha) / 2.0};

  auto dh = [&](double t) {
    return alpha * std::sin(2 * t) + beta * std::cos(2 * t) + gamma * std::sin(t) +
           delta * std::cos(t);
  };
  auto d2h = [&](double t) {
    return 2 * alpha * std::cos(2 * t) - 2 * beta * std::sin(2 * t) + gamma * std::cos(t) -
           delta * std::sin(t);
  };

  std::vector<double> angles = {std::numbers::pi, 0.0, std::numbers::pi / 2,
                                -std::numbers::pi / 2};
  double cmax = 0.0;
  for (const auto& c : coef) cmax = std::max(cmax, std::abs(c));
  if (cmax > 0.0) {
    const double tol = 1e-14 * cmax;
    std::size_t lo = 0, hi = coef.size() - 1;
    while (lo < hi && std::abs(coef[lo]) <= tol) ++lo;  // roots at z = 0
    while (hi > lo && std::abs(coef[hi]) <= tol) --hi;  // roots at infinity
    const auto deg = static_cast<Eigen::Index>(hi - lo);
    if (deg >= 1) {
      Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
      for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
      for (Eigen::Index i = 0; i < deg; ++i) {
        companion(i, deg - 1) = -coef[lo + static_cast<std::size_t>(i)] / coef[hi];
      }
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(companion, false);
      for (Eigen::Index i = 0; i < deg; ++i) {
        const cd z = ces.eigenvalues()[i];
        if (std::abs(z) == 0.0 || !std::isfinite(std::abs(z))) continue;
        double t = std::arg(z);
        angles.push_back(t);
        // Newton polish; the raw angle stays a candidate as well.
        double best = t, best_res = std::abs(dh(t));
        for (int it = 0; it < 4; ++it) {
          const double curv = d2h(t);
          if (curv == 0.0) break;
          t -= dh(t) / curv;
          const double res = std::abs(dh(t));
          if (res < best_res) {
            best = t;
            best_res = res;
          }
        }
        angles.push_back(best);
      }
    }
  }
  for (double t : angles) {
    Eigen::Vector2d u(std::cos(t), std::sin(t));
    out.push_back({u, true});
  }
}

// Root of ||u(mu)|| = 1 on (lo, hi) where u(mu)_i = -gt_i / (lam_i + mu).
double secular_root(const Eigen::VectorXd& lam, const Eigen::VectorXd& gt, double lo, double hi) {
  auto norm_at = [&](double mu) {
    return (gt.array() / (lam.array() + mu)).matrix().norm();
  };
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (norm_at(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

namespace detail {

Eigen::VectorXd minimize_on_unit_ball(const Eigen::MatrixXd& H, const Eigen::VectorXd& g) {
  // Objective 1/2 u^T B u + g^T u with B = 2H.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(2.0 * H);
  const Eigen::VectorXd& lam = eig.eigenvalues();  // ascending
  const Eigen::MatrixXd& Q = eig.eigenvectors();
  const Eigen::VectorXd gt = Q.transpose() * g;
  const auto n = lam.size();
  const double scale = std::max({lam.cwiseAbs().maxCoeff(), g.norm(), 1e-300});
  const double tol = 1e-12 * scale;
  const double lmin = lam[0];

  if (lmin > tol) {
    const Eigen::VectorXd ut = -(gt.array() / lam.array()).matrix();
    if (ut.norm() <= 1.0) return Q * ut;
  }

  const double mu_lo = std::max(0.0, -lmin);
  // Hard case: g has no component on the leftmost eigenspace and the
  // remaining components cannot reach the sphere.
  bool orthogonal = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lam[i] - lmin <= tol && std::abs(gt[i]) > tol) orthogonal = false;
  }
  if (orthogonal) {
    Eigen::VectorXd ut = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (lam[i] - lmin > tol) ut[i] = -gt[i] / (lam[i] + mu_lo);
    }
    const double nrm = ut.norm();
    if (nrm <= 1.0) {
      ut[0] = std::sqrt(std::max(0.0, 1.0 - nrm * nrm));
      return Q * ut;
    }
  }

  const double mu_hi = mu_lo + g.norm() + tol;
  const double mu = secular_root(lam, gt, mu_lo, mu_hi);
  Eigen::VectorXd ut = -(gt.array() / (lam.array() + mu)).matrix();
  const double nrm = ut.norm();
  if (nrm > 0.0) ut /= nrm;
  return Q * ut;
}

}  // namespace detail

BallExtremum max_abs_over_ball(const QuadraticPolynomial& q, const Ball& ball) {
  const std::size_t n = q.dimension();
  if (ball.center.dimension() != n) {
    throw InputError("polynomial dimension " + std::to_string(n) +
                     " does not match ball dimension " +
                     std::to_string(ball.center.dimension()));
  }
  if (!q.all_finite()) throw InputError("polynomial has non-finite coefficients");
  for (double c : ball.center.coords) {
    if (!std::isfinite(c)) throw InputError("ball center has non-finite coordinates");
  }

  const auto ni = static_cast<Eigen::Index>(n);
  const Eigen::Map<const Eigen::VectorXd> m(ball.center.coords.data(), ni);
  const double r = ball.radius;
  if (r == 0.0) return {std::abs(q(m)), ball.center, Attainment::Boundary};

  UnitProblem p{r * r * q.A(), r * q.gradient(m), q(m)};
  std::vector<Candidate> cands;
  add_interior_stationary(p, cands);
  if (n == 2) {
    add_circle_critical_points(p, cands);
  } else {
    Eigen::VectorXd umin = detail::minimize_on_unit_ball(p.H, p.g);
    Eigen::VectorXd umax = detail::minimize_on_unit_ball(-p.H, -p.g);
    cands.push_back({umin, umin.norm() > 1.0 - 1e-12});
    cands.push_back({umax, umax.norm() > 1.0 - 1e-12});
    Eigen::VectorXd lex = Eigen::VectorXd::Zero(ni);
    lex[0] = -1.0;
    cands.push_back({lex, true});
  }

  struct Scored {
    Eigen::VectorXd x;
    double value;
    bool boundary;
  };
  std::vector<Scored> scored;
  scored.reserve(cands.size());
  double best = 0.0;
  for (const auto& c : cands) {
    Eigen::VectorXd x = m + r * c.u;
    const double v = std::abs(q(x));
    best = std::max(best, v);
    scored.push_back({std::move(x), v, c.boundary});
  }
  const double tie = 1e-12 * std::max(1.0, best);
  const Scored* pick = nullptr;
  for (const auto& s : scored) {
    if (s.value < best - tie) continue;
    if (!pick) {
      pick = &s;
      continue;
    }
    if (s.boundary != pick->boundary) {
      if (s.boundary) pick = &s;
      continue;
    }
    if (std::lexicographical_compare(s.x.data(), s.x.data() + ni, pick->x.data(),
                                     pick->x.data() + ni)) {
      pick = &s;
    }
  }

  BallExtremum out;
  out.argmax = Point(std::vector<double>(pick->x.data(), pick->x.data() + ni));
  out.max_abs_value = pick->value;
  out.attained_on = pick->boundary ? Attainment::Boundary : Attainment::Interior;
  return out;
}

double sampled_max_abs(const QuadraticPolynomial& q, const Ball& ball, int samples_per_axis) {
  const std::size_t n = q.dimension();
  if (ball.center.dimension() != n) throw InputError("dimension mismatch");
  if (samples_per_axis < 2) throw InputError("samples_per_axis must be at least 2");
  const auto ni = static_cast<Eigen::Index>(n);
  const Eigen::Map<const Eigen::VectorXd> m(ball.center.coords.data(), ni);
  const double r = ball.radius;
  double best = std::abs(q(m));
  if (r == 0.0) return best;

  const double step = 2.0 * r / (samples_per_axis - 1);
  std::vector<int> idx(n, 0);
  Eigen::VectorXd x(ni);
  while (true) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double off = -r + step * idx[i];
      x[static_cast<Eigen::Index>(i)] = m[static_cast<Eigen::Index>(i)] + off;
      d2 += off * off;
    }
    if (d2 <= r * r) best = std::max(best, std::abs(q(x)));
    std::size_t axis = 0;
    while (axis < n && ++idx[axis] == samples_per_axis) {
      idx[axis] = 0;
      ++axis;
    }
    if (axis == n) break;
  }
  if (n == 2) {
    const int sweep = 4 * samples_per_axis;
    for (int k = 0; k < sweep; ++k) {
      const double t = 2.0 * std::numbers::pi * k / sweep;
      x[0] = m[0] + r * std::cos(t);
      x[1] = m[1] + r * std::sin(t);
      best = std::max(best, std::abs(q(x)));
    }
  }
  return best;
}

double gradient_bound(const QuadraticPolynomial& q, const Ball& ball) {
  const auto ni = static_cast<Eigen::Index>(q.dimension());
  const Eigen::Map<const Eigen::VectorXd> m(ball.center.coords.data(), ni);
  const double spectral = q.A().cwiseAbs().maxCoeff() == 0.0
                              ? 0.0
                              : Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(q.A(),
                                                                               Eigen::EigenvaluesOnly)
                                    .eigenvalues()
                                    .cwiseAbs()
                                    .maxCoeff();
  return q.gradient(m).norm() + 2.0 * spectral * ball.radius;
}

double sampling_gap_bound(const QuadraticPolynomial& q, const Ball& ball, int samples_per_axis) {
  if (q.dimension() != 2) throw InputError("sampling gap bound is only derived for the plane");
  const double r = ball.radius;
  const double step = 2.0 * r / (samples_per_axis - 1);
  const int sweep = 4 * samples_per_axis;
  const double half_diag = step * std::numbers::sqrt2 / 2.0;
  const double half_chord = 2.0 * r * std::sin(std::numbers::pi / (2.0 * sweep));
  return gradient_bound(q, ball) * (half_diag + half_chord);
}

}  // namespace dfogeom
