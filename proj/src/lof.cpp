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

#include "dfogeom/lof.hpp"

#include <algorithm>
#include <numeric>

namespace dfogeom {

void LofParams::validate(std::size_t set_size) const {
  if (min_pts < 1 || static_cast<std::size_t>(min_pts) + 1 > set_size) {
    throw InputError("min_pts " + std::to_string(min_pts) + " outside [1, " +
                     std::to_string(set_size > 0 ? set_size - 1 : 0) + "]");
  }
}

LofModel::LofModel(const PointSet& set, int min_pts) : k_(min_pts) {
  LofParams{min_pts}.validate(set.size());
  const std::size_t n = set.size();
  dist_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist_[i * n + j] = dist_[j * n + i] = euclidean_distance(set[i], set[j]);
    }
  }

  k_distance_.resize(n);
  neighbors_.resize(n);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    order.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) order.push_back(j);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return distance(i, a) < distance(i, b);
    });
    // k-th smallest distance satisfies both clauses: >= k objects at or
    // below it and <= k-1 strictly below.
    const double kd = distance(i, order[static_cast<std::size_t>(k_) - 1]);
    k_distance_[i] = kd;
    for (std::size_t j : order) {
      if (distance(i, j) > kd) break;
      neighbors_[i].push_back(j);
    }
  }

  lrd_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t o : neighbors_[i]) sum += reach_dist(i, o);
    lrd_[i] = static_cast<double>(neighbors_[i].size()) / sum;
  }
  lof_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t o : neighbors_[i]) sum += lrd_[o] / lrd_[i];
    lof_[i] = sum / static_cast<double>(neighbors_[i].size());
  }
}

double LofModel::reach_dist(std::size_t p, std::size_t o) const {
  return std::max(k_distance_[o], distance(p, o));
}

LofReport LofModel::report(const PointSet& set, double bad_threshold) const {
  LofReport out;
  out.params = {k_, bad_threshold};
  std::vector<double> values;
  std::vector<int> labels;
  for (std::size_t i = 0; i < size(); ++i) {
    LofEntry e;
    e.label = set[i].label;
    e.k_distance = k_distance_[i];
    for (std::size_t j : neighbors_[i]) e.neighborhood.push_back(set[j].label);
    e.lrd = lrd_[i];
    e.lof = lof_[i];
    values.push_back(e.lof);
    labels.push_back(e.label);
    out.entries.push_back(std::move(e));
  }
  const std::size_t best = argmax_smallest_label(values, labels);
  if (values[best] > bad_threshold) out.bad_point = labels[best];
  return out;
}

std::size_t argmax_smallest_label(const std::vector<double>& values, const std::vector<int>& labels) {
  if (values.empty()) throw InputError("argmax of an empty sequence");
  const double top = *std::max_element(values.begin(), values.end());
  const double tie = 1e-12 * std::max(1.0, std::abs(top));
  std::size_t best = values.size();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < top - tie) continue;
    if (best == values.size() || labels[i] < labels[best]) best = i;
  }
  return best;
}

namespace {

void check_k(const PointSet& set, int k) { LofParams{k}.validate(set.size()); }

}  // namespace

double k_distance(const PointSet& set, int p, int k) {
  check_k(set, k);
  return LofModel(set, k).k_distance(set.index_of(p));
}

std::vector<int> neighborhood(const PointSet& set, int p, int k) {
  check_k(set, k);
  LofModel model(set, k);
  std::vector<int> out;
  for (std::size_t j : model.neighborhood(set.index_of(p))) out.push_back(set[j].label);
  return out;
}

double reach_dist(const PointSet& set, int p, int o, int k) {
  if (p == o) throw InputError("reachability distance of a point to itself");
  check_k(set, k);
  return LofModel(set, k).reach_dist(set.index_of(p), set.index_of(o));
}

double lrd(const PointSet& set, int p, const LofParams& params) {
  params.validate(set.size());
  return LofModel(set, params.min_pts).lrd(set.index_of(p));
}

double lof(const PointSet& set, int p, const LofParams& params) {
  params.validate(set.size());
  return LofModel(set, params.min_pts).lof(set.index_of(p));
}

double lof_closed_form(const PointSet& set, int tau) {
  if (set.size() < 3) {
    throw InputError("closed-form LOF needs p >= 2 (at least 3 points) so that MinPts = p-1 >= 1");
  }
  const int p = static_cast<int>(set.size()) - 1;
  // y_j is the j-th point of the set; tau is located by label.
  const int t = static_cast<int>(set.index_of(tau));
  if (t < 1) {
    throw InputError("closed-form LOF indexes y1..yp; the first point (y0) has no value");
  }
  std::vector<double> farthest(set.size(), 0.0);
  for (std::size_t j = 0; j < set.size(); ++j) {
    for (std::size_t v = 0; v < set.size(); ++v) {
      farthest[j] = std::max(farthest[j], euclidean_distance(set[j], set[v]));
    }
  }
  auto row_sum = [&](int skip) {
    double s = 0.0;
    for (int j = 1; j <= p; ++j) {
      if (j != skip) s += farthest[static_cast<std::size_t>(j)];
    }
    return s;
  };
  const double s_tau = row_sum(t);
  double total = 0.0;
  for (int i = 1; i <= p; ++i) {
    if (i != t) total += s_tau / row_sum(i);
  }
  return total / (p - 1);
}

std::optional<int> bad_point_lof(const PointSet& set, const LofParams& params) {
  return lof_report(set, params).bad_point;
}

LofReport lof_report(const PointSet& set, const LofParams& params) {
  params.validate(set.size());
  return LofModel(set, params.min_pts).report(set, params.bad_threshold);
}

}  // namespace dfogeom
