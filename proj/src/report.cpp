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

#include "covpauli/report.hpp"

#include <charconv>
#include <cmath>

namespace covpauli {

CapacityReport evaluate_point(const ChannelParams& p,
                              const std::optional<OptimizerConfig>& cfg) {
  CapacityReport rep;
  rep.p0 = p.p0();
  rep.p3 = p.p3();
  rep.p1 = p.p1();
  rep.epsilon = p.epsilon();
  rep.classical = classical_capacity(p);
  rep.entanglement_assisted = entanglement_assisted_capacity(p);
  rep.regions = classify_regions(p);
  rep.upper_A = flag_bound_A(p);
  rep.upper_B = flag_bound_B(p);
  rep.best_upper = best_quantum_upper_bound(p);
  rep.private_upper = private_capacity_upper(p);
  // Anti-degradability subsumes entanglement breaking.
  rep.capacity_known_zero = rep.regions.antidegradable;
  if (cfg) {
    rep.single_shot = single_shot_quantum_capacity(p, *cfg);
    rep.lower = rep.capacity_known_zero ? 0.0 : rep.single_shot->value;
  }
  return rep;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  // std::to_chars is locale-independent, unlike printf.
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 10);
  return std::string(buf, res.ptr);
}

}  // namespace covpauli
