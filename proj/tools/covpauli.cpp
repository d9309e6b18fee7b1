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

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "covpauli/commands.hpp"

namespace {

void add_optimizer_flags(CLI::App* cmd, covpauli::OptimizerConfig& cfg) {
  cmd->add_option("--opt-grid", cfg.grid_resolution,
                  "Coherent-information grid resolution per axis")
      ->check(CLI::Range(2, 100000));
  cmd->add_option("--opt-tol", cfg.refine_tolerance, "Pattern-search step tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--opt-max-iter", cfg.refine_max_iterations,
                  "Pattern-search iteration cap")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = covpauli::cli;

  CLI::App app{"Capacities and capacity bounds of the covariant Pauli qubit channel"};
  app.require_subcommand(1);

  cli::PointOptions point;
  auto* point_cmd = app.add_subcommand("point", "Evaluate every quantity at one (p0, p3)");
  point_cmd->add_option("--p0", point.p0, "Identity weight p0")->required();
  point_cmd->add_option("--p3", point.p3, "Z weight p3")->required();
  point_cmd->add_flag("--json", point.json, "Emit JSON instead of aligned text");
  point_cmd->add_flag("--skip-lower", point.skip_lower, "Skip the coherent-information optimizer");
  add_optimizer_flags(point_cmd, point.optimizer);

  cli::ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate a simplex grid");
  scan_cmd->add_option("--grid", scan.grid_n, "Points per axis (>= 2)")->required();
  scan_cmd->add_option("--out", scan.out_path, "Output file")->required();
  const std::map<std::string, cli::ScanFormat> formats{{"csv", cli::ScanFormat::kCsv},
                                                       {"json", cli::ScanFormat::kJson}};
  scan_cmd->add_option("--format", scan.format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  scan_cmd->add_flag("--skip-lower", scan.skip_lower, "Omit the optimizer column");
  add_optimizer_flags(scan_cmd, scan.optimizer);

  cli::FigureOptions figure;
  auto* fig_cmd = app.add_subcommand("figure", "Emit plot-ready data for fig2..fig5");
  fig_cmd->add_option("which", figure.which, "fig2, fig3, fig4 or fig5")->required();
  fig_cmd->add_option("--out", figure.out_path, "Output file")->required();
  fig_cmd->add_option("--grid", figure.grid_n, "Simplex points per axis (fig2-fig4)");
  fig_cmd->add_option("--samples", figure.samples, "Samples along p0 + p3");
  fig_cmd->add_option("--eps", figure.eps, "Asymmetry values for fig5")->delimiter(',');
  add_optimizer_flags(fig_cmd, figure.optimizer);

  cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the brute-force oracle suite");
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--samples", verify.samples, "Random parameter points per oracle")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (point_cmd->parsed()) return cli::cmd_point(point, std::cout, std::cerr);
  if (scan_cmd->parsed()) return cli::cmd_scan(scan, std::cerr);
  if (fig_cmd->parsed()) return cli::cmd_figure(figure, std::cerr);
  if (verify_cmd->parsed()) return cli::cmd_verify(verify, std::cout);
  return cli::kExitUsage;
}
