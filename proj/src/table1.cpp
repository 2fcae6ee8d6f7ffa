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

#include "dfogeom/table1.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dfogeom/io.hpp"
#include "dfogeom/lof.hpp"
#include "dfogeom/poisedness.hpp"

namespace dfogeom {

PointSet six_point_example() {
  return PointSet::from_coords({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
}

std::vector<Table1Interpretation> table1_interpretations() {
  std::vector<Table1Interpretation> out;
  const PointSet six = six_point_example();
  const PointSet five = PointSet::from_coords({{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  for (int k : {3, 1}) {
    out.push_back({"six_k" + std::to_string(k),
                   "six points y0..y5, determined quadratic basis, k = " + std::to_string(k),
                   six,
                   {"y0", "y1", "y2", "y3", "y4", "y5"},
                   {1, 2, 3, 4, 5},
                   k,
                   BasisMode::Determined});
  }
  for (BasisMode mode : {BasisMode::MinFrobeniusNorm, BasisMode::ReducedBasis}) {
    for (int k : {3, 1}) {
      out.push_back({"five_" + to_string(mode) + "_k" + std::to_string(k),
                     "five points y1..y5 (y0 dropped), " + to_string(mode) + " basis, k = " +
                         std::to_string(k),
                     five,
                     {"y1", "y2", "y3", "y4", "y5"},
                     {0, 1, 2, 3, 4},
                     k,
                     mode});
    }
  }
  return out;
}

Table1Result evaluate_table1(const Table1Interpretation& interp) {
  Table1Result res;
  res.interpretation = interp;
  const PointSet& set = interp.set;
  const LofReport lof = lof_report(set, {interp.k, 1.2});

  std::optional<PoisednessReport> pr;
  try {
    pr = analyze(set, build_basis(set, interp.mode), interp.k);
    res.poised = true;
  } catch (const NotPoisedError&) {
    res.poised = false;
  }

  std::vector<double> lofs;
  std::vector<int> labels;
  for (const auto& e : lof.entries) {
    lofs.push_back(e.lof);
    labels.push_back(e.label);
  }
  res.lof_argmax = interp.names[argmax_smallest_label(lofs, labels)];
  if (lof.bad_point) res.lof_bad = interp.names[set.index_of(*lof.bad_point)];
  if (pr) res.lambda_bad = interp.names[set.index_of(pr->bad_point)];

  for (std::size_t c = 0; c < interp.columns.size(); ++c) {
    const std::size_t i = interp.columns[c];
    Table1Column col;
    col.name = interp.names[i];
    col.k_distance = lof.entries[i].k_distance;
    col.lof = lof.entries[i].lof;
    if (pr) col.lambda = pr->entries[i].lambda_i;
    res.max_dev_k_distance =
        std::max(res.max_dev_k_distance, std::abs(col.k_distance - Table1Published::k_distance[c]));
    res.max_dev_lof = std::max(res.max_dev_lof, std::abs(col.lof - Table1Published::lof[c]));
    if (col.lambda) {
      res.max_dev_lambda = std::max(res.max_dev_lambda.value_or(0.0),
                                    std::abs(*col.lambda - Table1Published::lambda[c]));
    }
    res.columns.push_back(col);
  }
  return res;
}

nlohmann::json table1_report() {
  nlohmann::json out;
  out["published"] = {{"points", {"y1", "y2", "y3", "y4", "y5"}},
                      {"k_distance", Table1Published::k_distance},
                      {"lof", Table1Published::lof},
                      {"lambda", Table1Published::lambda},
                      {"lambda_bad", "y5"},
                      {"lof_argmax", "y3"}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& interp : table1_interpretations()) {
    const Table1Result r = evaluate_table1(interp);
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : r.columns) {
      cols.push_back({{"point", c.name},
                      {"k_distance", round_sig10(c.k_distance)},
                      {"lof", round_sig10(c.lof)},
                      {"lambda", c.lambda ? nlohmann::json(round_sig10(*c.lambda)) : nullptr}});
    }
    list.push_back({{"id", interp.id},
                    {"description", interp.description},
                    {"k", interp.k},
                    {"basis_mode", to_string(interp.mode)},
                    {"poised", r.poised},
                    {"columns", cols},
                    {"lambda_bad", r.lambda_bad.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.lambda_bad)},
                    {"lof_argmax", r.lof_argmax},
                    {"lof_bad", r.lof_bad.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.lof_bad)},
                    {"matches_published_lambda_bad", r.lambda_bad == "y5"},
                    {"matches_published_lof_argmax", r.lof_argmax == "y3"},
                    {"max_abs_deviation",
                     {{"k_distance", round_sig10(r.max_dev_k_distance)},
                      {"lof", round_sig10(r.max_dev_lof)},
                      {"lambda", r.max_dev_lambda ? nlohmann::json(round_sig10(*r.max_dev_lambda))
                                                  : nlohmann::json(nullptr)}}}});
  }
  out["interpretations"] = list;
  return out;
}

std::string table1_text(const std::vector<Table1Result>& results) {
  std::ostringstream os;
  auto row = [&](const std::string& head, auto get) {
    os << "  " << head;
    for (std::size_t c = 0; c < 5; ++c) os << "  " << get(c);
    os << "\n";
  };
  os << "published\n";
  row("k-distance", [](std::size_t c) { return format_number(Table1Published::k_distance[c]); });
  row("LOF       ", [](std::size_t c) { return format_number(Table1Published::lof[c]); });
  row("Lambda    ", [](std::size_t c) { return format_number(Table1Published::lambda[c]); });
  for (const auto& r : results) {
    os << r.interpretation.id << ": " << r.interpretation.description << "\n";
    row("k-distance", [&](std::size_t c) { return format_number(r.columns[c].k_distance); });
    row("LOF       ", [&](std::size_t c) { return format_number(r.columns[c].lof); });
    row("Lambda    ", [&](std::size_t c) {
      return r.columns[c].lambda ? format_number(*r.columns[c].lambda) : std::string("n/a");
    });
    os << "  Lambda-bad " << (r.lambda_bad.empty() ? "-" : r.lambda_bad) << ", LOF argmax "
       << r.lof_argmax << ", LOF-bad " << (r.lof_bad.empty() ? "-" : r.lof_bad) << "\n";
  }
  return os.str();
}

}  // namespace dfogeom
