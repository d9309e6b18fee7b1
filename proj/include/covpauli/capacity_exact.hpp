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

#pragma once

#include <string_view>

#include "covpauli/channel.hpp"

namespace covpauli {

/// Where the antipodal pure states of the optimal ensemble sit.
enum class OptimalBranch {
  kEquatorial,  // xy-plane, theta = pi/2
  kPolar,       // poles, theta in {0, pi}
};

std::string_view to_string(OptimalBranch b);

struct ClassicalCapacityResult {
  double value = 0.0;  // bits, equals 1 - h(xi)
  double xi = 0.0;
  OptimalBranch branch = OptimalBranch::kEquatorial;
};

/// Equatorial iff (p0 - p3)^2 >= (2 p0 + 2 p3 - 1)^2 (ties go equatorial).
ClassicalCapacityResult classical_capacity(const ChannelParams& p);

/// 2 - H(p0, p1, p1, p3): mutual information at the maximally mixed input.
double entanglement_assisted_capacity(const ChannelParams& p);

/// S(rho) + S(Lambda(rho)) - S(Lambda^c(rho)) in bits.
double mutual_information(const ChannelParams& p, const BlochVector& b);

}  // namespace covpauli
