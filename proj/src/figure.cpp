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

#include "dfogeom/figure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dfogeom/io.hpp"

namespace dfogeom {

namespace {

std::vector<FigureMark> factor_marks(const PointSet& set, const std::vector<double>& values,
                                     int highlight_label, bool highlight) {
  std::vector<FigureMark> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const bool hot = highlight && set[i].label == highlight_label;
    out.push_back({set[i][0], set[i][1], "y" + std::to_string(set[i].label), values[i],
                   hot ? "highlight" : "point"});
  }
  return out;
}

std::vector<int> labels_of(const PointSet& set) {
  std::vector<int> l;
  for (const auto& p : set) l.push_back(p.label);
  return l;
}

struct Frame {
  double xmin, xmax, ymin, ymax, scale;
  double px(double x) const { return 20.0 + (x - xmin) * scale; }
  double py(double y) const { return 20.0 + (ymax - y) * scale; }
  double width() const { return 40.0 + (xmax - xmin) * scale; }
  double height() const { return 40.0 + (ymax - ymin) * scale; }
};

Frame frame_for(const std::vector<FigureMark>& marks, double pad) {
  Frame f{0, 0, 0, 0, 1};
  if (marks.empty()) return f;
  f.xmin = f.xmax = marks[0].x;
  f.ymin = f.ymax = marks[0].y;
  for (const auto& m : marks) {
    f.xmin = std::min(f.xmin, m.x);
    f.xmax = std::max(f.xmax, m.x);
    f.ymin = std::min(f.ymin, m.y);
    f.ymax = std::max(f.ymax, m.y);
  }
  f.xmin -= pad;
  f.xmax += pad;
  f.ymin -= pad;
  f.ymax += pad;
  const double span = std::max({f.xmax - f.xmin, f.ymax - f.ymin, 1e-9});
  f.scale = 480.0 / span;
  return f;
}

std::string header(const Frame& f, const std::string& title, const char* style) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(f.width())
     << "\" height=\"" << format_number(f.height() + 20) << "\">\n";
  os << "<style>" << style << "</style>\n";
  os << "<title>" << title << "</title>\n";
  os << "<text x=\"20\" y=\"" << format_number(f.height() + 12) << "\" font-size=\"12\">" << title
     << "</text>\n";
  return os.str();
}

}  // namespace

std::vector<FigureMark> lof_marks(const PointSet& set, const LofReport& report,
                                  HighlightRule rule) {
  std::vector<double> values;
  for (const auto& e : report.entries) values.push_back(e.lof);
  if (rule == HighlightRule::BadPoint) {
    return factor_marks(set, values, report.bad_point.value_or(0), report.bad_point.has_value());
  }
  const auto labels = labels_of(set);
  return factor_marks(set, values, labels[argmax_smallest_label(values, labels)], true);
}

std::vector<FigureMark> poisedness_marks(const PointSet& set, const PoisednessReport& report,
                                         HighlightRule /*rule*/) {
  // The Lambda-bad point is by definition the largest factor.
  std::vector<double> values;
  for (const auto& e : report.entries) values.push_back(e.lambda_i);
  return factor_marks(set, values, report.bad_point, true);
}

std::vector<FigureMark> sweep_marks(const SweepConfig& config, const ConfigurationResult& result) {
  std::vector<FigureMark> out;
  int label = 0;
  for (const auto& p : config.fixed_points) {
    out.push_back({p[0], p[1], point_name(label++), 0.0, "interp"});
  }
  out.push_back({result.y3[0], result.y3[1], point_name(label++), 0.0, "interp"});
  out.push_back({result.y4[0], result.y4[1], point_name(label++), 0.0, "interp"});
  for (const auto& r : result.records) {
    const char* cls = r.both() ? "green" : r.lambda_bad_is_y5() ? "blue"
                                        : r.lof_bad_is_y5()     ? "red"
                                                                : "none";
    out.push_back({r.y5[0], r.y5[1], to_string(r.state()), 0.0, cls});
  }
  return out;
}

std::string render_factor_svg(const std::vector<FigureMark>& marks, const std::string& title) {
  double vmax = 0.0;
  double spacing = 0.0;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    vmax = std::max(vmax, std::abs(marks[i].value));
    for (std::size_t j = i + 1; j < marks.size(); ++j) {
      const double d = std::hypot(marks[i].x - marks[j].x, marks[i].y - marks[j].y);
      spacing = spacing == 0.0 ? d : std::min(spacing, d);
    }
  }
  if (spacing == 0.0) spacing = 1.0;
  // Largest circle reaches half the closest pair spacing.
  const double rmax = 0.5 * spacing;
  const Frame f = frame_for(marks, rmax);
  std::ostringstream os;
  os << header(f, title,
               ".point{fill:none;stroke:#1f4e99;stroke-width:1.5}"
               ".highlight{fill:none;stroke:#d62728;stroke-width:2.5}"
               ".center{fill:#000}text{font-family:sans-serif}");
  for (const auto& m : marks) {
    const double r = vmax > 0.0 ? rmax * std::abs(m.value) / vmax : 0.0;
    os << "<circle class=\"" << m.css_class << "\" cx=\"" << format_number(f.px(m.x))
       << "\" cy=\"" << format_number(f.py(m.y)) << "\" r=\"" << format_number(r * f.scale)
       << "\"><title>" << m.name << " " << format_number(m.value) << "</title></circle>\n";
    os << "<circle class=\"center\" cx=\"" << format_number(f.px(m.x)) << "\" cy=\""
       << format_number(f.py(m.y)) << "\" r=\"2\"/>\n";
    os << "<text x=\"" << format_number(f.px(m.x) + 4) << "\" y=\"" << format_number(f.py(m.y) - 4)
       << "\" font-size=\"11\">" << m.name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_sweep_svg(const std::vector<FigureMark>& marks, const std::string& title) {
  const Frame f = frame_for(marks, 0.5);
  std::ostringstream os;
  os << header(f, title,
               ".interp{fill:#000}.blue{fill:#4fa3e0}.red{fill:#e05a4f}.green{fill:#3cb44b}"
               ".none{fill:#dddddd}text{font-family:sans-serif}");
  double spacing = 0.0;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    for (std::size_t j = i + 1; j < marks.size(); ++j) {
      const double d = std::hypot(marks[i].x - marks[j].x, marks[i].y - marks[j].y);
      spacing = spacing == 0.0 ? d : std::min(spacing, d);
    }
  }
  const double r = 0.3 * (spacing > 0.0 ? spacing : 1.0) * f.scale;
  for (const auto& m : marks) {
    os << "<circle class=\"" << m.css_class << "\" cx=\"" << format_number(f.px(m.x))
       << "\" cy=\"" << format_number(f.py(m.y)) << "\" r=\"" << format_number(r)
       << "\"><title>" << m.name << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string marks_csv(const std::vector<FigureMark>& marks) {
  std::string s = "name,x,y,value,class\n";
  for (const auto& m : marks) {
    s += m.name + "," + format_number(m.x) + "," + format_number(m.y) + "," +
         format_number(m.value) + "," + m.css_class + "\n";
  }
  return s;
}

std::string csv_twin_path(const std::string& svg_path) {
  const auto dot = svg_path.rfind('.');
  const auto slash = svg_path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return svg_path + ".csv";
  }
  return svg_path.substr(0, dot) + ".csv";
}

void write_figure(const std::string& path, const std::string& svg,
                  const std::vector<FigureMark>& marks) {
  write_file_atomic(path, svg);
  write_file_atomic(csv_twin_path(path), marks_csv(marks));
}

}  // namespace dfogeom
