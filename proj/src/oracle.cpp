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

#include "covpauli/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "covpauli/capacity_exact.hpp"

namespace covpauli::oracle {

namespace {

double max_entry_deviation(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double mutual_information_by_kraus(const KrausSet& k, const KrausSet& kc,
                                   const DensityMatrix& rho) {
  return von_neumann_entropy(rho) + von_neumann_entropy(apply_kraus(k, rho)) -
         von_neumann_entropy(apply_kraus(kc, rho));
}

}  // namespace

OracleReport make_report(std::string name, long samples, double deviation,
                         double tolerance, std::uint64_t seed) {
  OracleReport r;
  r.name = std::move(name);
  r.samples = samples;
  r.max_abs_deviation = deviation;
  r.tolerance = tolerance;
  r.passed = deviation <= tolerance;
  r.seed = seed;
  return r;
}

std::string format_report(const OracleReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%-28s samples=%-8ld max_abs_deviation=%.3e tolerance=%.1e seed=%llu %s",
                r.name.c_str(), r.samples, r.max_abs_deviation, r.tolerance,
                static_cast<unsigned long long>(r.seed), r.passed ? "PASS" : "FAIL");
  return buf;
}

double Sampler::uniform() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Sampler::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

ChannelParams Sampler::channel_params() {
  double a = uniform(), b = uniform();
  if (a + b > 1.0) {
    a = 1.0 - a;
    b = 1.0 - b;
  }
  return ChannelParams(a, b);
}

BlochVector Sampler::pure_state() {
  const double cos_theta = uniform(-1.0, 1.0);
  const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  return BlochVector(sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta);
}

BlochVector Sampler::mixed_state() {
  const BlochVector dir = pure_state();
  const double radius = std::cbrt(uniform());
  return BlochVector(radius * dir.x, radius * dir.y, radius * dir.z);
}

double oracle_holevo_classical(const ChannelParams& p, int theta_grid_size) {
  const KrausSet k = kraus_operators(p);
  const int n = std::max(theta_grid_size, 2);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double theta = std::numbers::pi * i / (n - 1);
    const auto rho = DensityMatrix::from_bloch(std::sin(theta), 0.0, std::cos(theta));
    best = std::max(best, 1.0 - von_neumann_entropy(apply_kraus(k, rho)));
  }
  return best;
}

double oracle_holevo_random_ensembles(const ChannelParams& p, int n_ensembles,
                                      std::uint64_t seed) {
  const KrausSet k = kraus_operators(p);
  Sampler sampler(seed);
  double best = -std::numeric_limits<double>::infinity();
  for (int e = 0; e < n_ensembles; ++e) {
    const int m = sampler.uniform_int(2, 4);
    std::vector<double> weights(static_cast<std::size_t>(m));
    std::vector<DensityMatrix> outputs;
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      weights[static_cast<std::size_t>(i)] = sampler.uniform() + 1e-12;
      total += weights[static_cast<std::size_t>(i)];
      outputs.push_back(apply_kraus(k, sampler.pure_state().state()));
    }
    CMatrix average = CMatrix::Zero(2, 2);
    double mean_entropy = 0.0;
    for (int i = 0; i < m; ++i) {
      const double w = weights[static_cast<std::size_t>(i)] / total;
      average += w * outputs[static_cast<std::size_t>(i)].matrix();
      mean_entropy += w * von_neumann_entropy(outputs[static_cast<std::size_t>(i)]);
    }
    const double chi =
        von_neumann_entropy(DensityMatrix::unchecked(std::move(average))) - mean_entropy;
    best = std::max(best, chi);
  }
  return best;
}

GridMaximum oracle_mutual_info_grid(const ChannelParams& p, int grid_resolution) {
  const KrausSet k = kraus_operators(p);
  const KrausSet kc = complement_kraus(k);
  const int n = std::max(grid_resolution, 2);
  GridMaximum out;
  out.spacing_r = 1.0 / (n - 1);
  out.spacing_z = 2.0 / (n - 1);
  out.value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double r = i * out.spacing_r;
    for (int j = 0; j < n; ++j) {
      const double z = -1.0 + j * out.spacing_z;
      if (r * r + z * z > 1.0 + 1e-12) continue;
      const auto rho = DensityMatrix::from_bloch(r, 0.0, z);
      const double val = mutual_information_by_kraus(k, kc, rho);
      if (val > out.value) {
        out.value = val;
        out.r = r;
        out.z = z;
      }
    }
  }
  return out;
}

OracleReport oracle_closed_forms(const ChannelParams& p, int n_states,
                                 std::uint64_t seed) {
  const KrausSet k = kraus_operators(p);
  const KrausSet kc = complement_kraus(k);
  Sampler sampler(seed);
  double worst = 0.0;
  for (int s = 0; s < n_states; ++s) {
    const BlochVector b = sampler.mixed_state();
    const DensityMatrix rho = b.state();

    const DensityMatrix out = apply_kraus(k, rho);
    worst = std::max(worst, max_entry_deviation(out.matrix(), channel_output(p, b).matrix()));

    const auto numeric = eigenvalues_hermitian(out);
    const auto [plus, minus] = channel_output_spectrum(p, b);
    worst = std::max({worst, std::abs(numeric[0] - plus), std::abs(numeric[1] - minus)});

    const DensityMatrix env = apply_kraus(kc, rho);
    worst = std::max(worst, max_entry_deviation(env.matrix(), complement_output(p, b).matrix()));
  }
  return make_report("closed_forms", n_states, worst, 1e-12, seed);
}

OracleReport oracle_pt_eigenvalues(int grid_n) {
  const int n = std::max(grid_n, 2);
  double worst = 0.0;
  long count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      const ChannelParams p(static_cast<double>(i) / (n - 1),
                            static_cast<double>(j) / (n - 1));
      const auto numeric =
          eigenvalues_hermitian(partial_transpose(choi_matrix(kraus_operators(p))));
      std::array<double, 4> expected{p.p0() + p.p3(), p.p0() + p.p3(),
                                     1.0 - 2.0 * p.p3(), 1.0 - 2.0 * p.p0()};
      std::sort(expected.begin(), expected.end(), std::greater<>());
      for (std::size_t q = 0; q < 4; ++q) {
        worst = std::max(worst, std::abs(numeric[q] - expected[q]));
      }
      ++count;
    }
  }
  return make_report("pt_eigenvalues", count, worst, 1e-10, 0);
}

std::vector<OracleReport> run_oracle_suite(const SuiteOptions& opts) {
  std::vector<OracleReport> reports;
  Sampler params(opts.seed);
  std::vector<ChannelParams> points;
  for (int i = 0; i < opts.samples; ++i) points.push_back(params.channel_params());

  {
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto r = oracle_closed_forms(points[i], opts.states_per_point, opts.seed + i + 1);
      worst = std::max(worst, r.max_abs_deviation);
    }
    reports.push_back(make_report("closed_forms",
                                  static_cast<long>(points.size()) * opts.states_per_point,
                                  worst, 1e-12, opts.seed));
  }
  {
    double worst = 0.0;
    for (const auto& p : points) {
      worst = std::max(worst, std::abs(oracle_holevo_classical(p, opts.theta_grid) -
                                       classical_capacity(p).value));
    }
    reports.push_back(make_report("holevo_classical", static_cast<long>(points.size()),
                                  worst, 1e-6, opts.seed));
  }
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double chi = oracle_holevo_random_ensembles(points[i], opts.ensembles_per_point,
                                                        opts.seed + 1000 + i);
      worst = std::max(worst, chi - classical_capacity(points[i]).value);
    }
    reports.push_back(make_report(
        "holevo_random_ensembles",
        static_cast<long>(points.size()) * opts.ensembles_per_point, std::max(0.0, worst),
        1e-9, opts.seed));
  }
  {
    double worst_value = 0.0;
    double worst_argmax = 0.0;
    for (const auto& p : points) {
      const auto g = oracle_mutual_info_grid(p, opts.mutual_info_grid);
      worst_value = std::max(worst_value, std::abs(g.value - entanglement_assisted_capacity(p)));
      worst_argmax = std::max({worst_argmax, g.r / g.spacing_r, std::abs(g.z) / g.spacing_z});
    }
    reports.push_back(make_report("mutual_info_grid", static_cast<long>(points.size()),
                                  worst_value, 1e-6, opts.seed));
    // Deviation in units of grid spacing.
    reports.push_back(make_report("mutual_info_argmax", static_cast<long>(points.size()),
                                  worst_argmax, 1.0, opts.seed));
  }
  reports.push_back(oracle_pt_eigenvalues(opts.pt_grid));
  return reports;
}

}  // namespace covpauli::oracle
