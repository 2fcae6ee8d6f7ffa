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

#include "dfogeom/poisedness.hpp"

#include <algorithm>

#include "dfogeom/lof.hpp"

namespace dfogeom {

namespace {

void check_basis(const PointSet& set, const LagrangeBasis& basis) {
  if (basis.size() != set.size() || basis.source.size() != set.size()) {
    throw InputError("basis was not built from this point set");
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!(basis.source[i] == set[i])) throw InputError("basis was not built from this point set");
  }
}

PoisednessReport score(const PointSet& set, const LagrangeBasis& basis,
                       const std::vector<Ball>& regions) {
  PoisednessReport out;
  std::vector<double> values;
  std::vector<int> labels;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const BallExtremum ext = max_abs_over_ball(basis[i], regions[i]);
    out.entries.push_back({set[i].label, regions[i], ext.max_abs_value, ext.argmax,
                           ext.attained_on});
    values.push_back(ext.max_abs_value);
    labels.push_back(set[i].label);
  }
  const std::size_t best = argmax_smallest_label(values, labels);
  out.lambda = *std::max_element(values.begin(), values.end());
  out.bad_point = labels[best];
  return out;
}

}  // namespace

PoisednessReport analyze(const PointSet& set, const LagrangeBasis& basis, int k) {
  check_basis(set, basis);
  const LofModel distances(set, k);
  std::vector<Ball> regions;
  regions.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) regions.emplace_back(set[i], distances.k_distance(i));
  return score(set, basis, regions);
}

PoisednessReport analyze_over_region(const PointSet& set, const LagrangeBasis& basis,
                                     const Ball& region) {
  check_basis(set, basis);
  if (region.center.dimension() != set.dimension()) {
    throw InputError("region dimension does not match the point set");
  }
  return score(set, basis, std::vector<Ball>(set.size(), region));
}

}  // namespace dfogeom
