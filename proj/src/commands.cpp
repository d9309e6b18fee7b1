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

#include "covpauli/commands.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "covpauli/errors.hpp"
#include "covpauli/oracle.hpp"
#include "covpauli/report.hpp"

namespace covpauli::cli {

namespace {

using nlohmann::ordered_json;

/// Rounds to the printed precision so JSON and text agree.
double rounded(double v) {
  const std::string s = format_number(v);
  double parsed = v;
  std::from_chars(s.data(), s.data() + s.size(), parsed);
  return parsed;
}

ordered_json report_to_json(const CapacityReport& rep) {
  ordered_json j;
  j["p0"] = rounded(rep.p0);
  j["p3"] = rounded(rep.p3);
  j["p1"] = rounded(rep.p1);
  j["epsilon"] = rounded(rep.epsilon);
  j["C_cl"] = rounded(rep.classical.value);
  j["xi"] = rounded(rep.classical.xi);
  j["branch"] = std::string(to_string(rep.classical.branch));
  j["C_E"] = rounded(rep.entanglement_assisted);
  j["A"] = rounded(rep.upper_A);
  j["B"] = rounded(rep.upper_B);
  j["best_upper"] = rounded(rep.best_upper.value);
  j["best_upper_source"] = std::string(to_string(rep.best_upper.source));
  j["private_upper"] = rounded(rep.private_upper);
  if (rep.single_shot) {
    j["lower"] = rounded(rep.lower);
    j["lower_unclamped"] = rounded(rep.single_shot->unclamped);
    j["argmax_r"] = rounded(rep.single_shot->r);
    j["argmax_z"] = rounded(rep.single_shot->z);
  }
  j["eb"] = rep.regions.entanglement_breaking;
  j["ad"] = rep.regions.antidegradable;
  j["ad_margin"] = rounded(rep.regions.ad_margin);
  ordered_json eig = ordered_json::array();
  for (double e : rep.regions.pt_eigenvalues) eig.push_back(rounded(e));
  j["pt_eigenvalues"] = eig;
  j["known_zero"] = rep.capacity_known_zero;
  return j;
}

void write_text_report(const CapacityReport& rep, std::ostream& out) {
  auto line = [&out](const char* key, const std::string& value) {
    out << std::left << std::setw(20) << key << value << '\n';
  };
  line("p0", format_number(rep.p0));
  line("p3", format_number(rep.p3));
  line("p1", format_number(rep.p1));
  line("epsilon", format_number(rep.epsilon));
  line("C_cl", format_number(rep.classical.value));
  line("xi", format_number(rep.classical.xi));
  line("branch", std::string(to_string(rep.classical.branch)));
  line("C_E", format_number(rep.entanglement_assisted));
  line("A", format_number(rep.upper_A));
  line("B", format_number(rep.upper_B));
  line("best_upper", format_number(rep.best_upper.value));
  line("best_upper_source", std::string(to_string(rep.best_upper.source)));
  line("private_upper", format_number(rep.private_upper));
  if (rep.single_shot) {
    line("lower", format_number(rep.lower));
    line("lower_unclamped", format_number(rep.single_shot->unclamped));
    line("argmax_r", format_number(rep.single_shot->r));
    line("argmax_z", format_number(rep.single_shot->z));
  }
  line("eb", format_bool(rep.regions.entanglement_breaking));
  line("ad", format_bool(rep.regions.antidegradable));
  line("ad_margin", format_number(rep.regions.ad_margin));
  std::string eig;
  for (std::size_t k = 0; k < rep.regions.pt_eigenvalues.size(); ++k) {
    if (k) eig += ' ';
    eig += format_number(rep.regions.pt_eigenvalues[k]);
  }
  line("pt_eigenvalues", eig);
  line("known_zero", format_bool(rep.capacity_known_zero));
}

template <typename Fn>
void for_each_simplex_point(int n, Fn&& fn) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      fn(ChannelParams(static_cast<double>(i) / (n - 1), static_cast<double>(j) / (n - 1)));
    }
  }
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << contents;
  f.flush();
  return static_cast<bool>(f);
}

std::string fig2(const FigureOptions& opts) {
  std::ostringstream out;
  out << "p0,p3,xi,branch,C_cl\n";
  for_each_simplex_point(opts.grid_n, [&out](const ChannelParams& p) {
    const auto c = classical_capacity(p);
    out << format_number(p.p0()) << ',' << format_number(p.p3()) << ','
        << format_number(c.xi) << ',' << to_string(c.branch) << ','
        << format_number(c.value) << '\n';
  });
  return out.str();
}

template <typename RootFn>
std::string boundary_polyline(int samples, RootFn&& root, bool with_capacities) {
  struct Point {
    double s, eps;
  };
  std::vector<Point> pts;
  for (int k = 1; k < samples; ++k) {
    const double s = static_cast<double>(k) / (samples - 1);
    if (const auto eps = root(s)) pts.push_back({s, *eps});
  }
  std::ostringstream out;
  out << "s,eps,p0,p3" << (with_capacities ? ",A,C_cl" : "") << '\n';
  auto emit = [&](double s, double eps) {
    const auto p = ChannelParams::from_sum_and_asymmetry(s, eps);
    out << format_number(s) << ',' << format_number(eps) << ',' << format_number(p.p0())
        << ',' << format_number(p.p3());
    if (with_capacities) {
      out << ',' << format_number(flag_bound_A(p)) << ','
          << format_number(classical_capacity(p).value);
    }
    out << '\n';
  };
  // Branch with p0 >= p3 first, then its mirror image under p0 <-> p3.
  for (const auto& pt : pts) emit(pt.s, pt.eps);
  for (const auto& pt : pts) {
    if (pt.eps > 0.0) emit(pt.s, -pt.eps);
  }
  return out.str();
}

FigureData fig3(const FigureOptions& opts) {
  std::ostringstream out;
  out << "p0,p3,eb,ad,ad_margin,min_pt_eigenvalue\n";
  for_each_simplex_point(opts.grid_n, [&out](const ChannelParams& p) {
    const auto flags = classify_regions(p);
    out << format_number(p.p0()) << ',' << format_number(p.p3()) << ','
        << format_bool(flags.entanglement_breaking) << ','
        << format_bool(flags.antidegradable) << ',' << format_number(flags.ad_margin) << ','
        << format_number(flags.pt_eigenvalues[3]) << '\n';
  });
  return {out.str(), boundary_polyline(
                         opts.samples, [](double s) { return antidegradable_boundary(s); },
                         false)};
}

FigureData fig4(const FigureOptions& opts) {
  std::ostringstream out;
  out << "p0,p3,A,B,C_cl,best_upper,best_upper_source\n";
  for_each_simplex_point(opts.grid_n, [&out](const ChannelParams& p) {
    const auto best = best_quantum_upper_bound(p);
    out << format_number(p.p0()) << ',' << format_number(p.p3()) << ','
        << format_number(flag_bound_A(p)) << ',' << format_number(flag_bound_B(p)) << ','
        << format_number(classical_capacity(p).value) << ',' << format_number(best.value)
        << ',' << to_string(best.source) << '\n';
  });
  return {out.str(), boundary_polyline(
                         opts.samples,
                         [](double s) { return classical_equals_A_boundary(s); }, true)};
}

std::string fig5(const FigureOptions& opts) {
  std::ostringstream out;
  out << "eps,s,upper,lower\n";
  for (double eps : opts.eps) {
    for (int k = 0; k < opts.samples; ++k) {
      const double s = opts.samples > 1 ? static_cast<double>(k) / (opts.samples - 1) : 1.0;
      const auto p = ChannelParams::from_sum_and_asymmetry(s, eps);
      const auto q = quantum_capacity_interval(p, opts.optimizer);
      out << format_number(eps) << ',' << format_number(s) << ','
          << format_number(q.best_upper) << ',' << format_number(q.lower_single_shot) << '\n';
    }
  }
  return out.str();
}

}  // namespace

int cmd_point(const PointOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const ChannelParams p(opts.p0, opts.p3);
    std::optional<OptimizerConfig> cfg;
    if (!opts.skip_lower) cfg = opts.optimizer;
    const CapacityReport rep = evaluate_point(p, cfg);
    if (opts.json) {
      out << report_to_json(rep).dump(2) << '\n';
    } else {
      write_text_report(rep, out);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

std::string scan_contents(const ScanOptions& opts) {
  if (opts.grid_n < 2) throw DomainError("grid size must be at least 2");
  std::optional<OptimizerConfig> cfg;
  if (!opts.skip_lower) cfg = opts.optimizer;

  std::vector<CapacityReport> rows;
  for_each_simplex_point(opts.grid_n, [&](const ChannelParams& p) {
    rows.push_back(evaluate_point(p, cfg));
  });

  std::ostringstream out;
  if (opts.format == ScanFormat::kJson) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : rows) arr.push_back(report_to_json(rep));
    out << arr.dump(1) << '\n';
    return out.str();
  }

  if (cfg) {
    out << kScanHeader << '\n';
  } else {
    out << "p0,p3,p1,C_cl,xi,branch,C_E,A,B,best_upper,best_upper_source,eb,ad,known_zero\n";
  }
  for (const auto& rep : rows) {
    out << format_number(rep.p0) << ',' << format_number(rep.p3) << ','
        << format_number(rep.p1) << ',' << format_number(rep.classical.value) << ','
        << format_number(rep.classical.xi) << ',' << to_string(rep.classical.branch) << ','
        << format_number(rep.entanglement_assisted) << ',' << format_number(rep.upper_A)
        << ',' << format_number(rep.upper_B) << ',' << format_number(rep.best_upper.value)
        << ',' << to_string(rep.best_upper.source) << ',';
    if (cfg) out << format_number(rep.lower) << ',';
    out << format_bool(rep.regions.entanglement_breaking) << ','
        << format_bool(rep.regions.antidegradable) << ','
        << format_bool(rep.capacity_known_zero) << '\n';
  }
  return out.str();
}

int cmd_scan(const ScanOptions& opts, std::ostream& err) {
  if (opts.grid_n < 2) {
    err << "error: --grid must be at least 2\n";
    return kExitUsage;
  }
  const std::string contents = scan_contents(opts);
  if (!write_file(opts.out_path, contents)) {
    err << "error: cannot write " << opts.out_path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

std::string boundary_path(const std::string& out_path) {
  const auto slash = out_path.find_last_of('/');
  const auto dot = out_path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out_path + "_boundary";
  }
  return out_path.substr(0, dot) + "_boundary" + out_path.substr(dot);
}

FigureData figure_data(const FigureOptions& opts) {
  if (opts.which == "fig2") return {fig2(opts), std::nullopt};
  if (opts.which == "fig3") return fig3(opts);
  if (opts.which == "fig4") return fig4(opts);
  if (opts.which == "fig5") return {fig5(opts), std::nullopt};
  throw std::invalid_argument("unknown figure '" + opts.which +
                              "' (expected fig2, fig3, fig4 or fig5)");
}

int cmd_figure(const FigureOptions& opts, std::ostream& err) {
  if (opts.grid_n < 2 || opts.samples < 2) {
    err << "error: --grid and --samples must be at least 2\n";
    return kExitUsage;
  }
  for (double e : opts.eps) {
    if (!(e >= -1.0 && e <= 1.0)) {
      err << "error: --eps values must lie in [-1, 1]\n";
      return kExitUsage;
    }
  }
  FigureData data;
  try {
    data = figure_data(opts);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!write_file(opts.out_path, data.main)) {
    err << "error: cannot write " << opts.out_path << '\n';
    return kExitIo;
  }
  if (data.boundary) {
    const std::string path = boundary_path(opts.out_path);
    if (!write_file(path, *data.boundary)) {
      err << "error: cannot write " << path << '\n';
      return kExitIo;
    }
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  oracle::SuiteOptions suite;
  suite.seed = opts.seed;
  suite.samples = opts.samples;
  const auto reports = oracle::run_oracle_suite(suite);
  bool all = true;
  for (const auto& r : reports) {
    out << oracle::format_report(r) << '\n';
    all = all && r.passed;
  }
  out << (all ? "all oracles passed" : "oracle verification FAILED") << '\n';
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace covpauli::cli
