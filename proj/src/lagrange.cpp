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

#include "dfogeom/lagrange.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "dfogeom/io.hpp"

namespace dfogeom {

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

double Monomial::evaluate(const Eigen::VectorXd& x) const {
  double v = 1.0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (int e = 0; e < exponents[i]; ++e) v *= x[static_cast<Eigen::Index>(i)];
  }
  return v;
}

std::string Monomial::name() const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial Monomial::parse(const std::string& text, std::size_t dimension) {
  Monomial m{std::vector<int>(dimension, 0)};
  if (text == "1") return m;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    if (factor.size() < 2 || factor[0] != 'x') throw InputError("bad monomial '" + text + "'");
    int power = 1;
    std::string var = factor.substr(1);
    if (auto caret = var.find('^'); caret != std::string::npos) {
      power = std::stoi(var.substr(caret + 1));
      var = var.substr(0, caret);
    }
    std::size_t axis = 0;
    try {
      axis = std::stoul(var);
    } catch (const std::exception&) {
      throw InputError("bad monomial '" + text + "'");
    }
    if (axis < 1 || axis > dimension || power < 1) {
      throw InputError("monomial '" + text + "' does not fit dimension " +
                       std::to_string(dimension));
    }
    m.exponents[axis - 1] += power;
  }
  if (m.degree() > 2) throw InputError("monomial '" + text + "' has degree above 2");
  return m;
}

MonomialBasis::MonomialBasis(std::size_t dimension, std::vector<Monomial> monomials)
    : dimension_(dimension), monomials_(std::move(monomials)) {
  if (monomials_.empty()) throw InputError("monomial basis is empty");
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i].exponents.size() != dimension_) {
      throw InputError("monomial dimension mismatch");
    }
    if (monomials_[i].degree() > 2) throw InputError("monomials above degree 2 unsupported");
    for (std::size_t j = 0; j < i; ++j) {
      if (monomials_[j] == monomials_[i]) {
        throw InputError("monomial " + monomials_[i].name() + " listed twice");
      }
    }
  }
}

MonomialBasis MonomialBasis::linear(std::size_t n) {
  std::vector<Monomial> ms;
  ms.push_back({std::vector<int>(n, 0)});
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m{std::vector<int>(n, 0)};
    m.exponents[i] = 1;
    ms.push_back(m);
  }
  return MonomialBasis(n, std::move(ms));
}

MonomialBasis MonomialBasis::quadratic(std::size_t n) {
  auto ms = linear(n).monomials();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Monomial m{std::vector<int>(n, 0)};
      m.exponents[i] += 1;
      m.exponents[j] += 1;
      ms.push_back(m);
    }
  }
  return MonomialBasis(n, std::move(ms));
}

MonomialBasis MonomialBasis::parse(const std::string& list, std::size_t dimension) {
  std::vector<Monomial> ms;
  for (const auto& tok : split_csv_line(list)) {
    if (!tok.empty()) ms.push_back(Monomial::parse(tok, dimension));
  }
  return MonomialBasis(dimension, std::move(ms));
}

int MonomialBasis::degree() const {
  int d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

std::string MonomialBasis::to_string() const {
  std::string out;
  for (const auto& m : monomials_) {
    if (!out.empty()) out += ",";
    out += m.name();
  }
  return out;
}

MonomialBasis default_reduced_basis(std::size_t n) {
  std::vector<Monomial> ms = MonomialBasis::linear(n).monomials();
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m{std::vector<int>(n, 0)};
    m.exponents[i] = 2;
    ms.push_back(m);
  }
  return MonomialBasis(n, std::move(ms));
}

QuadraticPolynomial::QuadraticPolynomial(Eigen::MatrixXd A, Eigen::VectorXd b, double c)
    : A_(std::move(A)), b_(std::move(b)), c_(c) {
  if (A_.rows() != A_.cols() || A_.rows() != b_.size()) {
    throw InputError("quadratic coefficient shapes disagree");
  }
  A_ = (0.5 * (A_ + A_.transpose())).eval();
}

QuadraticPolynomial QuadraticPolynomial::from_monomial_coefficients(
    const MonomialBasis& basis, const Eigen::VectorXd& coeffs) {
  const auto n = static_cast<Eigen::Index>(basis.dimension());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  double c = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& e = basis[k].exponents;
    const double v = coeffs[static_cast<Eigen::Index>(k)];
    std::vector<Eigen::Index> axes;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int r = 0; r < e[i]; ++r) axes.push_back(static_cast<Eigen::Index>(i));
    }
    if (axes.empty()) {
      c += v;
    } else if (axes.size() == 1) {
      b[axes[0]] += v;
    } else if (axes[0] == axes[1]) {
      A(axes[0], axes[0]) += v;
    } else {
      A(axes[0], axes[1]) += 0.5 * v;
      A(axes[1], axes[0]) += 0.5 * v;
    }
  }
  return QuadraticPolynomial(std::move(A), std::move(b), c);
}

QuadraticPolynomial QuadraticPolynomial::compose_affine(const Eigen::VectorXd& shift,
                                                        double scale) const {
  Eigen::MatrixXd A = A_ / (scale * scale);
  Eigen::VectorXd b = b_ / scale - 2.0 * A * shift;
  const double c = shift.dot(A * shift) - b_.dot(shift) / scale + c_;
  return QuadraticPolynomial(std::move(A), std::move(b), c);
}

bool QuadraticPolynomial::all_finite() const {
  return A_.allFinite() && b_.allFinite() && std::isfinite(c_);
}

double evaluate(const QuadraticPolynomial& poly, const Point& x) {
  if (x.dimension() != poly.dimension()) {
    throw InputError("evaluating a polynomial in dimension " + std::to_string(poly.dimension()) +
                     " at a point of dimension " + std::to_string(x.dimension()));
  }
  return poly(Eigen::Map<const Eigen::VectorXd>(x.coords.data(),
                                                static_cast<Eigen::Index>(x.dimension())));
}

std::string to_string(BasisMode mode) {
  switch (mode) {
    case BasisMode::Determined: return "determined";
    case BasisMode::MinFrobeniusNorm: return "mfn";
    case BasisMode::ReducedBasis: return "reduced";
  }
  return "unknown";
}

BasisMode parse_basis_mode(const std::string& text) {
  if (text == "determined") return BasisMode::Determined;
  if (text == "mfn") return BasisMode::MinFrobeniusNorm;
  if (text == "reduced") return BasisMode::ReducedBasis;
  throw InputError("unknown basis mode '" + text + "' (expected determined, mfn or reduced)");
}

namespace {

// Points mapped to u = (y - centroid) / scale, scale = max radius about the
// centroid. The solved polynomials are mapped back with compose_affine, which
// leaves the interpolant unchanged while keeping the monomial matrix O(1).
struct Normalized {
  Eigen::VectorXd shift;
  double scale = 1.0;
  std::vector<Eigen::VectorXd> pts;
};

Normalized normalize(const PointSet& set) {
  const auto n = static_cast<Eigen::Index>(set.dimension());
  Normalized out;
  out.shift = Eigen::VectorXd::Zero(n);
  for (const auto& p : set) out.shift += Eigen::Map<const Eigen::VectorXd>(p.coords.data(), n);
  out.shift /= static_cast<double>(set.size());
  double r = 0.0;
  for (const auto& p : set) {
    r = std::max(r, (Eigen::Map<const Eigen::VectorXd>(p.coords.data(), n) - out.shift).norm());
  }
  out.scale = r > 0.0 ? r : 1.0;
  for (const auto& p : set) {
    out.pts.push_back((Eigen::Map<const Eigen::VectorXd>(p.coords.data(), n) - out.shift) /
                      out.scale);
  }
  return out;
}

Eigen::MatrixXd monomial_matrix(const std::vector<Eigen::VectorXd>& pts,
                                const MonomialBasis& basis) {
  Eigen::MatrixXd M(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = basis[k].evaluate(pts[i]);
    }
  }
  return M;
}

double condition_of(const Eigen::JacobiSVD<Eigen::MatrixXd>& svd) {
  const auto& s = svd.singularValues();
  if (s.size() == 0) return std::numeric_limits<double>::infinity();
  const double smin = s[s.size() - 1];
  if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
  return s[0] / smin;
}

void require_poised(double condition, const std::string& what) {
  if (!(condition <= kNotPoisedCondition)) {
    throw NotPoisedError(what + " is not poised (condition estimate " + format_number(condition) +
                             ")",
                         condition);
  }
}

LagrangeBasis assemble(const PointSet& set, const Normalized& norm, const MonomialBasis& basis,
                       const Eigen::MatrixXd& coeffs, BasisMode mode, double condition) {
  LagrangeBasis out;
  out.source = set;
  out.mode = mode;
  out.condition = condition;
  out.polys.reserve(set.size());
  for (Eigen::Index i = 0; i < coeffs.cols(); ++i) {
    out.polys.push_back(QuadraticPolynomial::from_monomial_coefficients(basis, coeffs.col(i))
                            .compose_affine(norm.shift, norm.scale));
  }
  return out;
}

LagrangeBasis solve_square(const PointSet& set, const MonomialBasis& basis, BasisMode mode) {
  const Normalized norm = normalize(set);
  const Eigen::MatrixXd M = monomial_matrix(norm.pts, basis);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double cond = condition_of(svd);
  require_poised(cond, "interpolation set");
  // Row j of M holds phi(y_j); M * C = I puts the coefficients of l_i in column i.
  const Eigen::MatrixXd C = svd.solve(Eigen::MatrixXd::Identity(M.rows(), M.rows()));
  return assemble(set, norm, basis, C, mode, cond);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

LagrangeBasis build_determined(const PointSet& set) {
  if (set.empty()) throw InputError("empty interpolation set");
  const std::size_t need = binomial(set.dimension() + 2, 2);
  if (set.size() != need) {
    throw InputError("determined quadratic interpolation in dimension " +
                     std::to_string(set.dimension()) + " needs " + std::to_string(need) +
                     " points, got " + std::to_string(set.size()));
  }
  return solve_square(set, MonomialBasis::quadratic(set.dimension()), BasisMode::Determined);
}

LagrangeBasis build_reduced(const PointSet& set, const MonomialBasis& monomials) {
  if (set.empty()) throw InputError("empty interpolation set");
  if (monomials.dimension() != set.dimension()) {
    throw InputError("monomial basis dimension does not match the point set");
  }
  if (monomials.size() != set.size()) {
    throw InputError("reduced basis needs as many monomials (" + std::to_string(monomials.size()) +
                     ") as points (" + std::to_string(set.size()) + ")");
  }
  return solve_square(set, monomials, BasisMode::ReducedBasis);
}

LagrangeBasis build_min_frobenius(const PointSet& set) {
  if (set.empty()) throw InputError("empty interpolation set");
  const std::size_t n = set.dimension();
  const std::size_t m = set.size();
  const std::size_t full = binomial(n + 2, 2);
  if (m < n + 1 || m >= full) {
    throw InputError("minimum Frobenius norm model needs between " + std::to_string(n + 1) +
                     " and " + std::to_string(full - 1) + " points, got " + std::to_string(m));
  }
  const Normalized norm = normalize(set);
  const MonomialBasis basis = MonomialBasis::quadratic(n);
  const Eigen::MatrixXd M = monomial_matrix(norm.pts, basis);
  const auto mi = static_cast<Eigen::Index>(m);
  const auto nl = static_cast<Eigen::Index>(n + 1);
  const auto nq = static_cast<Eigen::Index>(full - n - 1);
  const Eigen::MatrixXd ML = M.leftCols(nl);
  const Eigen::MatrixXd MQ = M.rightCols(nq);

  Eigen::JacobiSVD<Eigen::MatrixXd> lin_svd(ML);
  require_poised(condition_of(lin_svd), "linear block of interpolation set");

  // ||A||_F^2 = sum c_ii^2 + sum_{i<j} c_ij^2 / 2, so cross terms weigh 1/2.
  Eigen::VectorXd winv(nq);
  for (Eigen::Index k = 0; k < nq; ++k) {
    const auto& e = basis[static_cast<std::size_t>(nl + k)].exponents;
    bool square = false;
    for (int v : e) square = square || v == 2;
    winv[k] = square ? 1.0 : 2.0;
  }

  // Stationarity: c_Q = W^{-1} M_Q^T lambda, M_L^T lambda = 0.
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(mi + nl, mi + nl);
  K.topLeftCorner(mi, mi) = MQ * winv.asDiagonal() * MQ.transpose();
  K.topRightCorner(mi, nl) = ML;
  K.bottomLeftCorner(nl, mi) = ML.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(K, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double cond = condition_of(svd);
  require_poised(cond, "interpolation set");

  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(mi + nl, mi);
  rhs.topRows(mi).setIdentity();
  const Eigen::MatrixXd sol = svd.solve(rhs);
  Eigen::MatrixXd C(nl + nq, mi);
  C.topRows(nl) = sol.bottomRows(nl);
  C.bottomRows(nq) = winv.asDiagonal() * MQ.transpose() * sol.topRows(mi);
  return assemble(set, norm, basis, C, BasisMode::MinFrobeniusNorm, cond);
}

LagrangeBasis build_basis(const PointSet& set, BasisMode mode,
                          const MonomialBasis* reduced_monomials) {
  switch (mode) {
    case BasisMode::Determined: return build_determined(set);
    case BasisMode::MinFrobeniusNorm: return build_min_frobenius(set);
    case BasisMode::ReducedBasis:
      if (reduced_monomials) return build_reduced(set, *reduced_monomials);
      return build_reduced(set, default_reduced_basis(set.dimension()));
  }
  throw InputError("unknown basis mode");
}

}  // namespace dfogeom
