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

// Subcommand bodies of the `covpauli` tool. Each returns the process exit
// code and writes only to the streams and paths it is given.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "covpauli/capacity_bounds.hpp"

namespace covpauli::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

inline constexpr const char* kScanHeader =
    "p0,p3,p1,C_cl,xi,branch,C_E,A,B,best_upper,best_upper_source,lower,eb,ad,known_zero";

struct PointOptions {
  double p0 = 0.0;
  double p3 = 0.0;
  bool json = false;
  bool skip_lower = false;
  OptimizerConfig optimizer;
};

int cmd_point(const PointOptions& opts, std::ostream& out, std::ostream& err);

enum class ScanFormat { kCsv, kJson };

struct ScanOptions {
  int grid_n = 101;
  std::string out_path;
  ScanFormat format = ScanFormat::kCsv;
  bool skip_lower = false;
  OptimizerConfig optimizer;
};

/// Rows for every feasible grid point, ordered by (p0, p3). Without the
/// optimizer the `lower` column is dropped.
std::string scan_contents(const ScanOptions& opts);

int cmd_scan(const ScanOptions& opts, std::ostream& err);

struct FigureOptions {
  std::string which;  // fig2 | fig3 | fig4 | fig5
  std::string out_path;
  int grid_n = 201;
  int samples = 101;
  std::vector<double> eps{0.2, 0.4, 0.6, 0.8, 1.0};
  OptimizerConfig optimizer;
};

struct FigureData {
  std::string main;
  /// Boundary polyline for fig3 and fig4.
  std::optional<std::string> boundary;
};

/// Throws std::invalid_argument for an unknown figure id.
FigureData figure_data(const FigureOptions& opts);

/// "out/fig4.csv" -> "out/fig4_boundary.csv".
std::string boundary_path(const std::string& out_path);

int cmd_figure(const FigureOptions& opts, std::ostream& err);

struct VerifyOptions {
  std::uint64_t seed = 20260101;
  int samples = 20;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace covpauli::cli
