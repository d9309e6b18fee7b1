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

#include "covpauli/capacity_exact.hpp"

#include <array>
#include <cmath>

namespace covpauli {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

std::string_view to_string(OptimalBranch b) {
  return b == OptimalBranch::kEquatorial ? "equatorial" : "polar";
}

ClassicalCapacityResult classical_capacity(const ChannelParams& p) {
  const double transverse = p.p0() - p.p3();
  const double longitudinal = 2.0 * p.p0() + 2.0 * p.p3() - 1.0;
  ClassicalCapacityResult out;
  if (transverse * transverse >= longitudinal * longitudinal) {
    out.branch = OptimalBranch::kEquatorial;
    out.xi = 0.5 * (1.0 + transverse);
  } else {
    out.branch = OptimalBranch::kPolar;
    out.xi = p.p0() + p.p3();
  }
  out.value = 1.0 - binary_entropy(out.xi);
  return out;
}

double entanglement_assisted_capacity(const ChannelParams& p) {
  const double rest = 1.0 - p.p0() - p.p3();
  return 2.0 + xlog2x(p.p0()) + (rest > 0.0 ? rest * std::log2(0.5 * rest) : 0.0) +
         xlog2x(p.p3());
}

double mutual_information(const ChannelParams& p, const BlochVector& b) {
  const DensityMatrix rho = b.state();
  return von_neumann_entropy(rho) + von_neumann_entropy(channel_output(p, b)) -
         von_neumann_entropy(complement_output(p, b));
}

}  // namespace covpauli
