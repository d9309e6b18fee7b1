// Copyright 2026 The covpauli Authors
//
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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "covpauli/commands.hpp"
#include "covpauli/report.hpp"

using namespace covpauli;
using namespace covpauli::cli;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "covpauli_test_commands";
  std::filesystem::create_directories(dir);
  return dir / name;
}

OptimizerConfig coarse() {
  OptimizerConfig cfg;
  cfg.grid_resolution = 41;
  return cfg;
}

}  // namespace

TEST_CASE("number formatting", "[cli]") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.18872187554086717) == "0.1887218755");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_bool(true) == std::string("true"));
}

TEST_CASE("point command", "[cli]") {
  std::ostringstream out, err;
  PointOptions opts;
  opts.p0 = 1.0;
  opts.optimizer = coarse();
  REQUIRE(cmd_point(opts, out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(text.find("C_cl                1\n") != std::string::npos);
  CHECK(text.find("C_E                 2\n") != std::string::npos);
  CHECK(text.find("best_upper          1\n") != std::string::npos);
  CHECK(text.find("lower               1\n") != std::string::npos);

  out.str("");
  opts.p0 = opts.p3 = 0.5;
  opts.json = true;
  REQUIRE(cmd_point(opts, out, err) == kExitOk);
  CHECK(out.str().find("\"A\": 0.0") != std::string::npos);
  CHECK(out.str().find("\"known_zero\": true") != std::string::npos);

  out.str("");
  opts.p0 = opts.p3 = 0.4;
  REQUIRE(cmd_point(opts, out, err) == kExitOk);
  CHECK(out.str().find("\"eb\": true") != std::string::npos);
  CHECK(out.str().find("\"ad\": true") != std::string::npos);
  CHECK(out.str().find("\"lower\": 0.0") != std::string::npos);

  opts.p0 = 0.8;
  opts.p3 = 0.5;
  err.str("");
  CHECK(cmd_point(opts, out, err) == kExitUsage);
  CHECK(err.str().find("p0 + p3") != std::string::npos);
}

TEST_CASE("scan command", "[cli]") {
  ScanOptions opts;
  opts.grid_n = 3;
  opts.optimizer = coarse();
  const auto rows = lines(scan_contents(opts));
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == kScanHeader);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(fields(rows[i]).size() == 15);
  // Lexicographic (p0, p3) order.
  CHECK(rows[1].rfind("0,0,", 0) == 0);
  CHECK(rows[3].rfind("0,1,", 0) == 0);
  CHECK(rows[6].rfind("1,0,", 0) == 0);
  CHECK(scan_contents(opts) == scan_contents(opts));

  opts.skip_lower = true;
  const auto fast = lines(scan_contents(opts));
  REQUIRE(fast.size() == 7);
  const auto fast_header = fields(fast[0]);
  CHECK(fast_header.size() == 14);
  CHECK(std::find(fast_header.begin(), fast_header.end(), "lower") == fast_header.end());

  opts.grid_n = 201;
  const auto big = lines(scan_contents(opts));
  CHECK(big.size() == 1 + 201 * 202 / 2);
  const auto half = std::find_if(big.begin(), big.end(), [](const std::string& l) {
    return l.rfind("0.5,0.5,", 0) == 0;
  });
  REQUIRE(half != big.end());
  CHECK(fields(*half)[7] == "0");

  opts.grid_n = 3;
  opts.format = ScanFormat::kJson;
  const std::string json = scan_contents(opts);
  CHECK(json.front() == '[');
  CHECK(std::count(json.begin(), json.end(), '{') == 6);
}

TEST_CASE("scan writes files and reports I/O failure", "[cli]") {
  ScanOptions opts;
  opts.grid_n = 4;
  opts.skip_lower = true;
  opts.out_path = scratch("scan_a.csv").string();
  std::ostringstream err;
  REQUIRE(cmd_scan(opts, err) == kExitOk);
  const std::string first = slurp(opts.out_path);
  REQUIRE(cmd_scan(opts, err) == kExitOk);
  CHECK(slurp(opts.out_path) == first);
  CHECK(first.find('\r') == std::string::npos);

  opts.out_path = "/nonexistent-dir/scan.csv";
  CHECK(cmd_scan(opts, err) == kExitIo);
  opts.grid_n = 1;
  CHECK(cmd_scan(opts, err) == kExitUsage);
}

TEST_CASE("figure data", "[cli]") {
  FigureOptions opts;
  opts.grid_n = 21;
  opts.samples = 21;
  opts.optimizer = coarse();

  opts.which = "fig2";
  auto data = figure_data(opts);
  CHECK(!data.boundary);
  auto rows = lines(data.main);
  CHECK(rows[0] == "p0,p3,xi,branch,C_cl");
  CHECK(rows.size() == 1 + 21 * 22 / 2);

  opts.which = "fig3";
  data = figure_data(opts);
  REQUIRE(data.boundary);
  rows = lines(data.main);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    if (f[2] == "true") CHECK(f[3] == "true");
  }

  opts.which = "fig4";
  data = figure_data(opts);
  REQUIRE(data.boundary);
  rows = lines(data.main);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(fields(rows[i]).back() != "B");
  const auto poly = lines(*data.boundary);
  CHECK(poly[0] == "s,eps,p0,p3,A,C_cl");
  CHECK(poly.size() > 10);

  opts.which = "fig5";
  opts.eps = {1.0};
  opts.samples = 5;
  rows = lines(figure_data(opts).main);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "eps,s,upper,lower");
  CHECK(rows.back() == "1,1,1,1");

  opts.which = "fig9";
  CHECK_THROWS_AS(figure_data(opts), std::invalid_argument);
  std::ostringstream err;
  opts.out_path = scratch("fig9.csv").string();
  CHECK(cmd_figure(opts, err) == kExitUsage);
}

TEST_CASE("figure files are deterministic", "[cli]") {
  FigureOptions opts;
  opts.which = "fig4";
  opts.grid_n = 11;
  opts.samples = 11;
  opts.out_path = scratch("fig4.csv").string();
  std::ostringstream err;
  REQUIRE(cmd_figure(opts, err) == kExitOk);
  const std::string main = slurp(opts.out_path);
  const std::string side = slurp(boundary_path(opts.out_path));
  REQUIRE(cmd_figure(opts, err) == kExitOk);
  CHECK(slurp(opts.out_path) == main);
  CHECK(slurp(boundary_path(opts.out_path)) == side);
  CHECK(boundary_path("a/b.csv") == "a/b_boundary.csv");
  CHECK(boundary_path("a.d/b") == "a.d/b_boundary");
}

TEST_CASE("verify command", "[cli]") {
  VerifyOptions opts;
  opts.seed = 7;
  opts.samples = 2;
  std::ostringstream a, b;
  CHECK(cmd_verify(opts, a) == kExitOk);
  CHECK(cmd_verify(opts, b) == kExitOk);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("FAIL") == std::string::npos);
}
