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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "dfogeom/ball_max.hpp"
#include "dfogeom/census.hpp"
#include "dfogeom/core.hpp"
#include "dfogeom/figure.hpp"
#include "dfogeom/io.hpp"
#include "dfogeom/lagrange.hpp"
#include "dfogeom/lof.hpp"
#include "dfogeom/poisedness.hpp"
#include "dfogeom/sweep.hpp"
#include "dfogeom/table1.hpp"

namespace dfogeom::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string points;
  std::string out;
  std::string mode = "auto";
  std::string monomials;
  int k = 0;
  int min_pts = 0;
  double threshold = 1.2;
  std::string region = "kdist";
  int point = -1;
  std::string config;
  int jobs = 0;
  int conjecture_id = 1;
  std::string line = "through_points";
  std::string report;
  std::string y3, y4;
  std::string highlight = "largest";
};

// Text output goes to --out atomically, or to stdout.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file_atomic(o.out, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::size_t full_quadratic_size(std::size_t n) { return (n + 1) * (n + 2) / 2; }

BasisMode resolve_mode(const Options& o, const PointSet& set) {
  if (o.mode != "auto") return parse_basis_mode(o.mode);
  return set.size() == full_quadratic_size(set.dimension()) ? BasisMode::Determined
                                                            : BasisMode::MinFrobeniusNorm;
}

LagrangeBasis make_basis(const Options& o, const PointSet& set) {
  const BasisMode mode = resolve_mode(o, set);
  if (mode == BasisMode::ReducedBasis && !o.monomials.empty()) {
    return build_reduced(set, MonomialBasis::parse(o.monomials, set.dimension()));
  }
  return build_basis(set, mode);
}

int default_k(const Options& o, const PointSet& set, int given) {
  (void)o;
  if (given > 0) return given;
  const int k = static_cast<int>(set.size()) - 2;
  if (k < 1) throw InputError("point set too small for the default k = |set| - 2");
  return k;
}

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> v;
  for (const auto& f : split_csv_line(text)) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(f, &used));
      if (used != f.size()) throw std::invalid_argument(f);
    } catch (const std::exception&) {
      throw InputError("bad number '" + f + "' in '" + text + "'");
    }
  }
  return v;
}

json poly_json(const QuadraticPolynomial& p, int label) {
  // Solver residue far below the coefficient scale prints as 0.
  const double scale = std::max({1.0, p.A().cwiseAbs().maxCoeff(), p.b().cwiseAbs().maxCoeff(),
                                 std::abs(p.c())});
  auto clean = [&](double v) { return std::abs(v) <= 1e-12 * scale ? 0.0 : round_sig10(v); };
  json A = json::array();
  json upper = json::array();
  const auto n = p.A().rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < n; ++j) {
      row.push_back(clean(p.A()(i, j)));
      if (j >= i) upper.push_back(clean(p.A()(i, j)));
    }
    A.push_back(row);
  }
  json b = json::array();
  for (Eigen::Index i = 0; i < n; ++i) b.push_back(clean(p.b()[i]));
  return {{"label", label}, {"A_upper", upper}, {"A", A}, {"b", b}, {"c", clean(p.c())}};
}

int cmd_lagrange(const Options& o, std::ostream& out) {
  const PointSet set = load_points_csv(o.points);
  const LagrangeBasis basis = make_basis(o, set);
  json polys = json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) polys.push_back(poly_json(basis[i], set[i].label));
  json j = {{"mode", to_string(basis.mode)},
            {"dimension", set.dimension()},
            {"condition", round_sig10(basis.condition)},
            {"label_convention", "label i is row i of the input (0-based)"},
            {"polynomials", polys}};
  emit(o, dump(j), out);
  return 0;
}

int cmd_lambda(const Options& o, std::ostream& out) {
  const PointSet set = load_points_csv(o.points);
  const LagrangeBasis basis = make_basis(o, set);
  PoisednessReport rep;
  if (o.region == "kdist") {
    rep = analyze(set, basis, default_k(o, set, o.k));
  } else if (o.region.rfind("shared:", 0) == 0) {
    auto v = parse_coords(o.region.substr(7));
    if (v.size() != set.dimension() + 1) {
      throw InputError("--region shared: needs center coordinates followed by the radius");
    }
    const double r = v.back();
    v.pop_back();
    rep = analyze_over_region(set, basis, Ball(Point(v), r));
  } else {
    throw InputError("--region must be kdist or shared:<c1,...,cn,r>");
  }

  if (o.point >= 0) {
    const auto& e = rep.entries.at(set.index_of(o.point));
    std::ostringstream os;
    os << "point " << e.label << " max " << format_number(e.lambda_i) << " argmax (";
    for (std::size_t i = 0; i < e.argmax.dimension(); ++i) {
      os << (i ? "," : "") << format_number(e.argmax[i]);
    }
    os << ") attained " << to_string(e.attained_on) << " radius " << format_number(e.region.radius)
       << "\n";
    emit(o, os.str(), out);
    return 0;
  }

  std::string csv = "label,radius,lambda_i";
  for (std::size_t i = 0; i < set.dimension(); ++i) csv += ",argmax_x" + std::to_string(i + 1);
  csv += ",is_bad\n";
  for (const auto& e : rep.entries) {
    csv += std::to_string(e.label) + "," + format_number(e.region.radius) + "," +
           format_number(e.lambda_i);
    for (double c : e.argmax.coords) csv += "," + format_number(c);
    csv += e.label == rep.bad_point ? ",1\n" : ",0\n";
  }
  emit(o, csv, out);
  return 0;
}

int cmd_lof(const Options& o, std::ostream& out) {
  const PointSet set = load_points_csv(o.points);
  const LofReport rep = lof_report(set, {default_k(o, set, o.min_pts), o.threshold});
  std::string csv = "label,k_distance,lrd,lof,is_bad\n";
  for (const auto& e : rep.entries) {
    csv += std::to_string(e.label) + "," + format_number(e.k_distance) + "," +
           format_number(e.lrd) + "," + format_number(e.lof) + "," +
           (rep.bad_point == e.label ? "1" : "0") + "\n";
  }
  emit(o, csv, out);
  return 0;
}

int cmd_bad_points(const Options& o, std::ostream& out) {
  const PointSet set = load_points_csv(o.points);
  const int k = default_k(o, set, o.k);
  const LagrangeBasis basis = make_basis(o, set);
  const PoisednessReport pr = analyze(set, basis, k);
  const LofReport lr = lof_report(set, {k, o.threshold});
  json j = {{"lambda_bad", pr.bad_point},
            {"lof_bad", lr.bad_point ? json(*lr.bad_point) : json(nullptr)},
            {"lambda", round_sig10(pr.lambda)},
            {"k", k},
            {"mode", to_string(basis.mode)},
            {"lof_threshold", round_sig10(o.threshold)},
            {"label_convention", "label i is row i of the input (0-based)"}};
  emit(o, dump(j), out);
  return 0;
}

SweepConfig load_config(const Options& o) {
  if (o.config.empty()) {
    SweepConfig c;
    c.validate();
    return c;
  }
  json j;
  try {
    j = json::parse(read_file(o.config));
  } catch (const json::parse_error& e) {
    throw InputError("cannot parse config " + o.config + ": " + e.what());
  }
  return sweep_config_from_json(j);
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("cannot create " + dir);
}

std::vector<double> census_radii(const SweepConfig& c) {
  std::vector<double> radii{c.trap_far_radius};
  for (double r : {2.0, std::numbers::sqrt2}) {
    if (std::abs(r - c.trap_far_radius) > 1e-12) radii.push_back(r);
  }
  return radii;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const SweepConfig config = load_config(o);
  if (o.out.empty()) throw InputError("sweep needs --out <dir>");
  ensure_dir(o.out);
  const std::string records_path = o.out + "/records.csv";
  const std::string tmp = records_path + ".tmp";

  std::vector<TrapCensusAccumulator> censuses;
  for (double r : census_radii(config)) censuses.emplace_back(config, r, config.trap_near_radius);
  Conjecture1Checker conj1(config);
  std::uint64_t records = 0, poised = 0;
  std::map<std::string, std::uint64_t> states;
  for (auto s : {SweepState::Both, SweepState::LambdaOnly, SweepState::LofOnly, SweepState::Neither,
                 SweepState::Unpoised}) {
    states[to_string(s)] = 0;
  }
  {
    std::ofstream csv(tmp, std::ios::binary | std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot open " + tmp);
    csv << records_csv_header();
    std::string buf;
    full_sweep(
        config,
        [&](const ConfigurationResult& r) {
          buf.clear();
          for (const auto& rec : r.records) {
            buf += to_csv_row(rec);
            ++records;
            poised += rec.poised;
            ++states[to_string(rec.state())];
          }
          csv << buf;
          for (auto& c : censuses) c.add(r);
          conj1.add(r);
        },
        o.jobs);
    if (!csv) throw std::runtime_error("failed writing " + tmp);
  }
  std::filesystem::rename(tmp, records_path);

  json cj = json::array();
  for (const auto& c : censuses) cj.push_back(to_json(c.census()));
  write_file_atomic(o.out + "/census.json",
                    dump({{"primary_far_radius", round_sig10(config.trap_far_radius)},
                          {"censuses", cj}}));

  const auto& c1 = conj1.report();
  json summary = {
      {"config", to_json(config)},
      {"expected_records", placement_count(config)},
      {"records", records},
      {"poised", poised},
      {"unpoised", records - poised},
      {"states", states},
      {"trap_rate_total", round_sig10(censuses.front().census().total.rate())},
      {"conjecture1",
       {{"hypothesis_count", c1.hypothesis_count},
        {"satisfied_count", c1.satisfied_count},
        {"counterexample_fraction", round_sig10(c1.counterexample_fraction())}}},
      {"label_convention",
       "points are named y1..y5 as in the five-point experiment; internal label = index - 1"}};
  write_file_atomic(o.out + "/summary.json", dump(summary));
  out << "records " << records << " (expected " << placement_count(config) << "), trap rate "
      << format_number(censuses.front().census().total.rate()) << "\n";
  return 0;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  const SweepConfig config = load_config(o);
  if (o.out.empty()) throw InputError("conjecture needs --out <dir>");
  if (o.conjecture_id != 1 && o.conjecture_id != 2) throw InputError("--id must be 1 or 2");
  ensure_dir(o.out);
  const std::string path = o.out + "/conjecture" + std::to_string(o.conjecture_id) + "_report.json";
  if (o.conjecture_id == 1) {
    const auto rep = check_conjecture_1(config, o.jobs);
    json j = to_json(rep);
    j["config"] = to_json(config);
    write_file_atomic(path, dump(j));
    out << "conjecture 1: " << rep.satisfied_count << "/" << rep.hypothesis_count
        << " hypothesis configurations satisfied\n";
    return 0;
  }
  const LineReading primary = parse_line_reading(o.line);
  const LineReading other =
      primary == LineReading::ThroughPoints ? LineReading::ThroughOrigin : LineReading::ThroughPoints;
  Conjecture2Checker a(config, primary), b(config, other);
  full_sweep(
      config,
      [&](const ConfigurationResult& r) {
        a.add(r);
        b.add(r);
      },
      o.jobs);
  json j = to_json(a.report());
  json alt = to_json(b.report());
  alt.erase("counterexamples");
  j["alternate_reading"] = alt;
  j["config"] = to_json(config);
  write_file_atomic(path, dump(j));
  out << "conjecture 2 (" << to_string(primary) << "): " << a.report().satisfied_count << "/"
      << a.report().hypothesis_count << " collinear instances satisfied\n";
  return 0;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw InputError("report CSV lacks column '" + name + "'");
  }
};

CsvTable read_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  CsvTable t;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (t.header.empty()) {
      t.header = split_csv_line(line);
    } else {
      t.rows.push_back(split_csv_line(line));
    }
  }
  if (t.header.empty()) throw InputError("empty report CSV " + path);
  return t;
}

int cmd_figure(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw InputError("figure needs --out <file.svg>");
  const HighlightRule rule = o.highlight == "largest" ? HighlightRule::Largest
                             : o.highlight == "bad"   ? HighlightRule::BadPoint
                                                      : throw InputError("--highlight must be largest or bad");
  const std::string text = read_file(o.report);
  if (text.rfind(records_csv_header(), 0) == 0) {
    const auto groups = group_by_configuration(parse_records_csv(text));
    if (groups.empty()) throw InputError("records CSV has no rows");
    const ConfigurationResult* pick = &groups.front();
    if (!o.y3.empty() || !o.y4.empty()) {
      const Point y3(parse_coords(o.y3)), y4(parse_coords(o.y4));
      pick = nullptr;
      for (const auto& g : groups) {
        if (g.y3 == y3 && g.y4 == y4) pick = &g;
      }
      if (!pick) throw InputError("no records for the requested y3/y4 placement");
    }
    const SweepConfig config = load_config(o);
    const auto marks = sweep_marks(config, *pick);
    write_figure(o.out, render_sweep_svg(marks, "y5 states"), marks);
    out << "wrote " << o.out << "\n";
    return 0;
  }

  const CsvTable t = read_csv(o.report);
  const bool is_lof = std::find(t.header.begin(), t.header.end(), "lof") != t.header.end();
  const std::size_t vcol = t.column(is_lof ? "lof" : "lambda_i");
  const std::size_t lcol = t.column("label");
  const std::size_t bcol = t.column("is_bad");
  if (o.points.empty()) throw InputError("figure needs --points for LOF or lambda reports");
  const PointSet set = load_points_csv(o.points);
  if (t.rows.size() != set.size()) throw InputError("report and point set sizes differ");
  std::vector<double> values;
  std::vector<int> labels;
  std::optional<int> bad;
  for (const auto& row : t.rows) {
    values.push_back(std::stod(row.at(vcol)));
    labels.push_back(std::stoi(row.at(lcol)));
    if (row.at(bcol) == "1") bad = labels.back();
  }
  std::optional<int> hot = bad;
  if (rule == HighlightRule::Largest) hot = labels[argmax_smallest_label(values, labels)];
  std::vector<FigureMark> marks;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Point& p = set[set.index_of(labels[i])];
    marks.push_back({p[0], p[1], "y" + std::to_string(labels[i]), values[i],
                     hot == labels[i] ? "highlight" : "point"});
  }
  write_figure(o.out, render_factor_svg(marks, is_lof ? "LOF" : "Lambda-poisedness"), marks);
  out << "wrote " << o.out << "\n";
  return 0;
}

int cmd_table1(const Options& o, std::ostream& out) {
  std::vector<Table1Result> results;
  for (const auto& interp : table1_interpretations()) results.push_back(evaluate_table1(interp));
  if (!o.out.empty()) write_file_atomic(o.out, dump(table1_report()));
  out << table1_text(results);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lagrange basis geometry, Lambda-poisedness and LOF experiments"};
  app.require_subcommand(0, 1);
  Options o;
  bool version = false;
  app.add_flag("--version", version, "Print version and the default sweep config");

  auto points_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--points", o.points, "Point CSV (header x1,...,xn)");
    opt->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto mode_opt = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "auto, determined, mfn or reduced")
        ->check(CLI::IsMember({"auto", "determined", "mfn", "reduced"}));
    sub->add_option("--monomials", o.monomials, "Reduced basis monomials, e.g. 1,x1,x2,x1^2,x2^2");
  };
  auto out_opt = [&](CLI::App* sub, const char* help) { sub->add_option("--out", o.out, help); };

  auto* lagrange = app.add_subcommand("lagrange", "Lagrange basis as JSON");
  points_opt(lagrange, true);
  mode_opt(lagrange);
  out_opt(lagrange, "Output JSON path (default stdout)");

  auto* lambda = app.add_subcommand("lambda", "Per-point Lambda-poisedness contributions");
  points_opt(lambda, true);
  mode_opt(lambda);
  lambda->add_option("--k", o.k, "k for k-distance regions (default |set|-2)")->check(CLI::PositiveNumber);
  lambda->add_option("--region", o.region, "kdist or shared:<c1,...,cn,r>");
  lambda->add_option("--point", o.point, "Only report this label (max, argmax, attainment)");
  out_opt(lambda, "Output CSV path (default stdout)");

  auto* lof_cmd = app.add_subcommand("lof", "Local outlier factors");
  points_opt(lof_cmd, true);
  lof_cmd->add_option("--min-pts", o.min_pts, "MinPts (default |set|-2)")->check(CLI::PositiveNumber);
  lof_cmd->add_option("--threshold", o.threshold, "LOF bad-point threshold");
  out_opt(lof_cmd, "Output CSV path (default stdout)");

  auto* bad = app.add_subcommand("bad-points", "Lambda-bad and LOF-bad points of a set");
  points_opt(bad, true);
  mode_opt(bad);
  bad->add_option("--k", o.k, "k for regions and MinPts (default |set|-2)")->check(CLI::PositiveNumber);
  bad->add_option("--threshold", o.threshold, "LOF bad-point threshold");
  out_opt(bad, "Output JSON path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Full grid sweep with trap census");
  sweep->add_option("--config", o.config, "SweepConfig JSON")->check(CLI::ExistingFile);
  sweep->add_option("--out", o.out, "Output directory")->required();
  sweep->add_option("--jobs", o.jobs, "Worker threads (default all)");

  auto* conj = app.add_subcommand("conjecture", "Check a conjecture over the grid");
  conj->add_option("--id", o.conjecture_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  conj->add_option("--config", o.config, "SweepConfig JSON")->check(CLI::ExistingFile);
  conj->add_option("--out", o.out, "Output directory")->required();
  conj->add_option("--jobs", o.jobs, "Worker threads (default all)");
  conj->add_option("--line", o.line, "Line reading for conjecture 2")
      ->check(CLI::IsMember({"through_points", "through_origin"}));

  auto* fig = app.add_subcommand("figure", "Render a report CSV as SVG (plus CSV twin)");
  fig->add_option("--report", o.report, "lof, lambda or sweep records CSV")
      ->required()
      ->check(CLI::ExistingFile);
  points_opt(fig, false);
  fig->add_option("--config", o.config, "SweepConfig JSON (records figures)")->check(CLI::ExistingFile);
  fig->add_option("--y3", o.y3, "Placement of y3 for records figures, e.g. -2,-1");
  fig->add_option("--y4", o.y4, "Placement of y4 for records figures");
  fig->add_option("--highlight", o.highlight, "largest or bad");
  fig->add_option("--out", o.out, "Output SVG path")->required();

  auto* table1 = app.add_subcommand("table1", "Observed vs published values of the five-point example");
  out_opt(table1, "Output JSON path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (version) {
      SweepConfig def;
      out << "dfogeom " << kVersion << "\n" << dump(to_json(def));
      return 0;
    }
    if (lagrange->parsed()) return cmd_lagrange(o, out);
    if (lambda->parsed()) return cmd_lambda(o, out);
    if (lof_cmd->parsed()) return cmd_lof(o, out);
    if (bad->parsed()) return cmd_bad_points(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (conj->parsed()) return cmd_conjecture(o, out);
    if (fig->parsed()) return cmd_figure(o, out);
    if (table1->parsed()) return cmd_table1(o, out);
    err << "error: no subcommand given (see --help)\n";
    return 1;
  } catch (const NotPoisedError& e) {
    err << "not poised: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dfogeom::cli
