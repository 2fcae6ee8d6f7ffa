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

#include <vector>

#include "dfogeom/ball_max.hpp"
#include "dfogeom/lagrange.hpp"

namespace dfogeom {

struct PoisednessEntry {
  int label = 0;
  Ball region;
  double lambda_i = 0.0;  // max over region of |l_i|
  Point argmax;
  Attainment attained_on = Attainment::Boundary;
};

struct PoisednessReport {
  std::vector<PoisednessEntry> entries;  // in point-set order
  double lambda = 0.0;
  int bad_point = 0;  // label attaining lambda, smallest label on ties
};

// Each point is scored over the ball centered at itself whose radius is its
// k-distance within the set.
PoisednessReport analyze(const PointSet& set, const LagrangeBasis& basis, int k);

// Every point scored over the same region.
PoisednessReport analyze_over_region(const PointSet& set, const LagrangeBasis& basis,
                                     const Ball& region);

}  // namespace dfogeom
