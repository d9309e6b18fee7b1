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

#include <optional>
#include <string>

#include "covpauli/capacity_bounds.hpp"
#include "covpauli/capacity_exact.hpp"

namespace covpauli {

/// Everything computed at one parameter point.
struct CapacityReport {
  double p0 = 0.0;
  double p3 = 0.0;
  double p1 = 0.0;
  double epsilon = 0.0;
  ClassicalCapacityResult classical;
  double entanglement_assisted = 0.0;
  RegionFlags regions;
  double upper_A = 0.0;
  double upper_B = 0.0;
  BestUpperBound best_upper;
  double private_upper = 0.0;
  /// Absent when the optimizer was skipped.
  std::optional<SingleShotResult> single_shot;
  double lower = 0.0;
  bool capacity_known_zero = false;
};

/// When `cfg` is nullopt the coherent-information optimizer is not run and
/// the lower bound is left at 0.
CapacityReport evaluate_point(const ChannelParams& p,
                              const std::optional<OptimizerConfig>& cfg);

/// Ten significant digits, shortest form, independent of the C locale.
std::string format_number(double v);

inline const char* format_bool(bool b) { return b ? "true" : "false"; }

}  // namespace covpauli
