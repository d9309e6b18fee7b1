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

// Brute-force cross-checks of the closed-form results. These use only the
// generic linear-algebra layer (Kraus application, Jacobi spectra, entropies)
// so they stay independent of the formulas they check.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "covpauli/channel.hpp"

namespace covpauli::oracle {

struct OracleReport {
  std::string name;
  long samples = 0;
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
};

/// Fills `passed` from the deviation and tolerance.
OracleReport make_report(std::string name, long samples, double deviation,
                         double tolerance, std::uint64_t seed);

std::string format_report(const OracleReport& r);

/// Seeded sampling helpers. Uniform doubles are built from the top 53 bits of
/// mt19937_64 so sequences do not depend on the standard library's
/// distribution implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive

  /// Uniform on the triangle p0, p3 >= 0, p0 + p3 <= 1.
  ChannelParams channel_params();
  /// Uniform on the unit sphere: cos(theta) and phi uniform.
  BlochVector pure_state();
  /// Uniform in the unit ball.
  BlochVector mixed_state();

 private:
  std::mt19937_64 rng_;
};

/// max over theta in [0, pi] (uniform grid) of 1 - S(Lambda(rho(theta))),
/// rho(theta) with Bloch vector (sin theta, 0, cos theta).
double oracle_holevo_classical(const ChannelParams& p, int theta_grid_size);

/// Largest Holevo quantity of the output ensemble over random ensembles of
/// 2 to 4 pure states with random weights.
double oracle_holevo_random_ensembles(const ChannelParams& p, int n_ensembles,
                                      std::uint64_t seed);

struct GridMaximum {
  double value = 0.0;
  double r = 0.0;
  double z = 0.0;
  double spacing_r = 0.0;
  double spacing_z = 0.0;
};

/// Grid search of S(rho) + S(Lambda(rho)) - S(Lambda^c(rho)) over the
/// half-disc with an n x n grid; ties go to the smallest r, then z.
GridMaximum oracle_mutual_info_grid(const ChannelParams& p, int grid_resolution);

/// Kraus application vs the output closed form, Jacobi spectrum vs the
/// output-spectrum closed form, generic complement vs the environment
/// closed form; max entrywise deviation over n_states random states.
OracleReport oracle_closed_forms(const ChannelParams& p, int n_states,
                                 std::uint64_t seed);

/// Sorted numeric partial-transpose spectrum vs the closed-form multiset
/// over the simplex grid with spacing 1 / (grid_n - 1).
OracleReport oracle_pt_eigenvalues(int grid_n);

struct SuiteOptions {
  std::uint64_t seed = 20260101;
  int samples = 20;  // random parameter points per oracle
  int states_per_point = 1000;
  int theta_grid = 10000;
  int ensembles_per_point = 200;
  int mutual_info_grid = 201;
  int pt_grid = 201;
};

/// Runs every oracle and returns one report each.
std::vector<OracleReport> run_oracle_suite(const SuiteOptions& opts);

}  // namespace covpauli::oracle
