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

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dfogeom/core.hpp"

namespace dfogeom {

// Condition estimate above which an interpolation system counts as singular.
inline constexpr double kNotPoisedCondition = 1e12;

// Product of coordinate powers; exponents[i] is the power of x_{i+1}.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  double evaluate(const Eigen::VectorXd& x) const;
  // "1", "x1", "x1^2", "x1*x2".
  std::string name() const;
  static Monomial parse(const std::string& text, std::size_t dimension);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Ordered monomial list spanning (a subspace of) polynomials of degree <= 2.
class MonomialBasis {
 public:
  // Full quadratic basis: 1, x1..xn, then x_i*x_j for i <= j in lexicographic
  // order. For n = 2 that is {1, x1, x2, x1^2, x1*x2, x2^2}.
  static MonomialBasis quadratic(std::size_t dimension);
  static MonomialBasis linear(std::size_t dimension);
  // Comma separated names, e.g. "1,x1,x2,x1^2,x2^2".
  static MonomialBasis parse(const std::string& list, std::size_t dimension);

  MonomialBasis(std::size_t dimension, std::vector<Monomial> monomials);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return monomials_.size(); }
  int degree() const;
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::string to_string() const;

 private:
  std::size_t dimension_;
  std::vector<Monomial> monomials_;
};

// q(x) = x^T A x + b^T x + c with A symmetric.
class QuadraticPolynomial {
 public:
  QuadraticPolynomial() = default;
  // A is symmetrized as (A + A^T) / 2.
  QuadraticPolynomial(Eigen::MatrixXd A, Eigen::VectorXd b, double c);

  // Coefficients in the order of `basis` (degree <= 2 monomials only).
  static QuadraticPolynomial from_monomial_coefficients(const MonomialBasis& basis,
                                                        const Eigen::VectorXd& coeffs);

  std::size_t dimension() const { return static_cast<std::size_t>(b_.size()); }
  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::VectorXd& b() const { return b_; }
  double c() const { return c_; }

  double operator()(const Eigen::VectorXd& x) const { return x.dot(A_ * x) + b_.dot(x) + c_; }
  Eigen::VectorXd gradient(const Eigen::VectorXd& x) const { return 2.0 * A_ * x + b_; }

  // p(x) = q((x - shift) / scale).
  QuadraticPolynomial compose_affine(const Eigen::VectorXd& shift, double scale) const;

  bool all_finite() const;

 private:
  Eigen::MatrixXd A_;
  Eigen::VectorXd b_;
  double c_ = 0.0;
};

double evaluate(const QuadraticPolynomial& poly, const Point& x);

enum class BasisMode { Determined, MinFrobeniusNorm, ReducedBasis };

std::string to_string(BasisMode mode);
BasisMode parse_basis_mode(const std::string& text);

struct LagrangeBasis {
  PointSet source;
  std::vector<QuadraticPolynomial> polys;
  BasisMode mode = BasisMode::Determined;
  // Condition estimate of the (normalized) system that was solved.
  double condition = 1.0;

  std::size_t size() const { return polys.size(); }
  const QuadraticPolynomial& operator[](std::size_t i) const { return polys[i]; }
};

// Requires |set| = C(n+2, 2). Throws NotPoisedError when the interpolation
// matrix has condition estimate above kNotPoisedCondition.
LagrangeBasis build_determined(const PointSet& set);

// Requires n+1 <= |set| < C(n+2, 2). Each polynomial is the interpolant of
// the i-th unit vector whose quadratic block A has least Frobenius norm.
LagrangeBasis build_min_frobenius(const PointSet& set);

// Square interpolation on the span of `monomials` (|set| = |monomials|).
LagrangeBasis build_reduced(const PointSet& set, const MonomialBasis& monomials);

// Default reduced basis for five points in the plane: {1, x1, x2, x1^2, x2^2}.
MonomialBasis default_reduced_basis(std::size_t dimension);

LagrangeBasis build_basis(const PointSet& set, BasisMode mode,
                          const MonomialBasis* reduced_monomials = nullptr);

}  // namespace dfogeom
