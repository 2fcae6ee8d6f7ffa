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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "dfogeom/figure.hpp"
#include "dfogeom/io.hpp"
#include "dfogeom/lof.hpp"
#include "dfogeom/poisedness.hpp"

using namespace dfogeom;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path workdir() {
  const char* env = std::getenv("DFOGEOM_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "dfogeom_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = (workdir() / name).string();
  write_file_atomic(p, text);
  return p;
}

const char* kSix = "x1,x2\n0,0\n1,0\n0,1\n2,0\n1,1\n0,2\n";
const char* kFive = "x1,x2\n-1,0\n1,0\n-2,-1\n-2,3\n2,2\n";

}  // namespace

TEST_CASE("lagrange on the six point set") {
  const auto pts = write("six.csv", kSix);
  const auto out = (workdir() / "six_basis.json").string();
  const auto r = run({"lagrange", "--points", pts, "--mode", "determined", "--out", out});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(read_file(out));
  CHECK(j["mode"] == "determined");
  const auto& l4 = j["polynomials"][4];
  CHECK(l4["A"] == nlohmann::json::parse("[[0,0.5],[0.5,0]]"));
  CHECK(l4["A_upper"] == nlohmann::json::parse("[0,0.5,0]"));
  CHECK(l4["b"] == nlohmann::json::parse("[0,0]"));
  CHECK(l4["c"] == 0);
}

TEST_CASE("lof on the six point set") {
  const auto pts = write("six.csv", kSix);
  const auto out = (workdir() / "six_lof.csv").string();
  REQUIRE(run({"lof", "--points", pts, "--min-pts", "3", "--out", out}).code == 0);
  const auto text = read_file(out);
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  CHECK(line == "label,k_distance,lrd,lof,is_bad");
  int rows = 0;
  while (std::getline(is, line)) {
    const auto f = split_csv_line(line);
    REQUIRE(f.size() == 5);
    const double v = std::stod(f[3]);
    CHECK(std::isfinite(v));
    CHECK(v > 0);
    ++rows;
  }
  CHECK(rows == 6);
}

TEST_CASE("bad-points equals the library composition") {
  const auto pts = write("five.csv", kFive);
  const auto out = (workdir() / "five_bad.json").string();
  REQUIRE(run({"bad-points", "--points", pts, "--k", "3", "--out", out}).code == 0);
  const auto j = nlohmann::json::parse(read_file(out));
  const auto set = parse_points_csv(kFive);
  const auto report = analyze(set, build_min_frobenius(set), 3);
  CHECK(j["lambda_bad"] == report.bad_point);
  const auto lof_bad = bad_point_lof(set, {3});
  if (lof_bad) {
    CHECK(j["lof_bad"] == *lof_bad);
  } else {
    CHECK(j["lof_bad"].is_null());
  }
}

TEST_CASE("lambda csv and debug point") {
  const auto pts = write("six.csv", kSix);
  const auto out = (workdir() / "six_lambda.csv").string();
  REQUIRE(run({"lambda", "--points", pts, "--k", "3", "--out", out}).code == 0);
  const auto text = read_file(out);
  CHECK(text.rfind("label,radius,lambda_i,argmax_x1,argmax_x2,is_bad\n", 0) == 0);
  const auto dbg = run({"lambda", "--points", pts, "--k", "3", "--point", "5"});
  CHECK(dbg.code == 0);
  CHECK(dbg.out.find("max 6") != std::string::npos);
  CHECK(dbg.out.find("boundary") != std::string::npos);
  const auto shared = run({"lambda", "--points", pts, "--region", "shared:0,0,1"});
  CHECK(shared.code == 0);
}

TEST_CASE("exit codes") {
  const auto bad_csv = write("bad.csv", "x1,x2\n0,0\n1\n");
  CHECK(run({"lof", "--points", bad_csv}).code == 1);
  CHECK(run({"lof", "--points", (workdir() / "absent.csv").string()}).code == 1);
  CHECK(run({"lagrange", "--bogus"}).code == 1);
  CHECK(run({}).code == 1);
  // Five collinear points defeat the minimum norm model.
  const auto line = write("line.csv", "x1,x2\n0,0\n1,0\n2,0\n3,0\n4,0\n");
  const auto r = run({"lagrange", "--points", line, "--mode", "mfn"});
  CHECK(r.code == 2);
  CHECK(r.err.find('\n') == r.err.size() - 1);
  CHECK(run({"bad-points", "--points", line, "--k", "3"}).code == 2);
}

TEST_CASE("invalid flags leave no output behind") {
  const auto pts = write("six.csv", kSix);
  const auto out = workdir() / "never.json";
  fs::remove(out);
  CHECK(run({"lagrange", "--points", pts, "--mode", "cubic", "--out", out.string()}).code == 1);
  CHECK_FALSE(fs::exists(out));
  CHECK(run({"lof", "--points", pts, "--min-pts", "9", "--out", out.string()}).code == 1);
  CHECK_FALSE(fs::exists(out));
  const auto dir = workdir() / "never_sweep";
  fs::remove_all(dir);
  const auto cfg = write("bad_cfg.json", R"({"k": 17})");
  CHECK(run({"sweep", "--config", cfg, "--out", dir.string()}).code == 1);
  CHECK_FALSE(fs::exists(dir / "records.csv"));
  CHECK_FALSE(fs::exists(dir / "census.json"));
}

TEST_CASE("sweep and conjecture commands are idempotent") {
  const auto cfg = write("coarse.json", R"({"region": {"lower": [-4,-4], "upper": [4,4], "step": 2}})");
  const auto a = workdir() / "sweep_a", b = workdir() / "sweep_b";
  REQUIRE(run({"sweep", "--config", cfg, "--out", a.string(), "--jobs", "1"}).code == 0);
  REQUIRE(run({"sweep", "--config", cfg, "--out", b.string(), "--jobs", "3"}).code == 0);
  for (const char* f : {"records.csv", "census.json", "summary.json"})
    CHECK(read_file((a / f).string()) == read_file((b / f).string()));
  const auto summary = nlohmann::json::parse(read_file((a / "summary.json").string()));
  CHECK(summary["records"] == summary["expected_records"]);
  CHECK_FALSE(fs::exists(a / "records.csv.tmp"));

  const auto c1 = workdir() / "conj";
  REQUIRE(run({"conjecture", "--id", "1", "--config", cfg, "--out", c1.string()}).code == 0);
  const auto first = read_file((c1 / "conjecture1_report.json").string());
  REQUIRE(run({"conjecture", "--id", "1", "--config", cfg, "--out", c1.string()}).code == 0);
  CHECK(read_file((c1 / "conjecture1_report.json").string()) == first);
  REQUIRE(run({"conjecture", "--id", "2", "--config", cfg, "--out", c1.string()}).code == 0);
  const auto j2 = nlohmann::json::parse(read_file((c1 / "conjecture2_report.json").string()));
  CHECK(j2.contains("alternate_reading"));
  CHECK(run({"conjecture", "--id", "3", "--out", c1.string()}).code == 1);
}

TEST_CASE("lagrange output is idempotent") {
  const auto pts = write("six.csv", kSix);
  const auto out = (workdir() / "idem.json").string();
  REQUIRE(run({"lagrange", "--points", pts, "--out", out}).code == 0);
  const auto first = read_file(out);
  REQUIRE(run({"lagrange", "--points", pts, "--out", out}).code == 0);
  CHECK(read_file(out) == first);
}

TEST_CASE("figure from reports") {
  const auto pts = write("six.csv", kSix);
  const auto lof_csv = (workdir() / "fig_lof.csv").string();
  REQUIRE(run({"lof", "--points", pts, "--out", lof_csv}).code == 0);
  const auto svg = (workdir() / "fig_lof.svg").string();
  REQUIRE(run({"figure", "--report", lof_csv, "--points", pts, "--out", svg}).code == 0);
  CHECK(read_file(svg).find("<svg") != std::string::npos);
  CHECK(fs::exists(csv_twin_path(svg)));

  const auto cfg = write("coarse.json", R"({"region": {"lower": [-4,-4], "upper": [4,4], "step": 2}})");
  const auto dir = workdir() / "sweep_a";
  REQUIRE(run({"sweep", "--config", cfg, "--out", dir.string()}).code == 0);
  const auto rec_svg = (workdir() / "records.svg").string();
  CHECK(run({"figure", "--report", (dir / "records.csv").string(), "--config", cfg, "--y3", "-4,-4",
             "--y4", "4,4", "--out", rec_svg})
            .code == 0);
  CHECK(read_file(rec_svg).find("class=\"interp\"") != std::string::npos);
}

TEST_CASE("version and table1") {
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.rfind(std::string("dfogeom ") + cli::kVersion, 0) == 0);
  const auto t = run({"table1"});
  CHECK(t.code == 0);
  CHECK(t.out.find("six_k3") != std::string::npos);
}
