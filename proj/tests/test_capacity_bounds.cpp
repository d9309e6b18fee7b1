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

#include <cmath>
#include <random>

#include "catch_amalgamated.hpp"
#include "covpauli/capacity_bounds.hpp"
#include "covpauli/capacity_exact.hpp"
#include "covpauli/errors.hpp"

using namespace covpauli;
using Catch::Matchers::WithinAbs;

namespace {

// Independent transcriptions of the two flag bounds; zero-weight terms drop.
double term(double w, double part) {
  return w > 0.0 ? w * (1.0 - binary_entropy(part / w)) : 0.0;
}
double ref_A(double p0, double p3) { return term(p0 + p3, p0); }
double ref_B(double p0, double p3) {
  const double p1 = (1 - p0 - p3) / 2;
  return term(p0 + p1, p1) + term(p1 + p3, p1);
}

// Coarse optimizer settings keep unit-test runtime modest.
OptimizerConfig coarse() {
  OptimizerConfig cfg;
  cfg.grid_resolution = 41;
  return cfg;
}

}  // namespace

TEST_CASE("entanglement breaking examples", "[bounds]") {
  auto eb = entanglement_breaking_test(ChannelParams(1, 0));
  CHECK_FALSE(eb.entanglement_breaking);
  const std::array<double, 4> id{1, 1, 1, -1};
  for (int i = 0; i < 4; ++i) CHECK_THAT(eb.pt_eigenvalues[i], WithinAbs(id[i], 1e-12));

  eb = entanglement_breaking_test(ChannelParams(0.4, 0.4));
  CHECK(eb.entanglement_breaking);
  const std::array<double, 4> sq{0.8, 0.8, 0.2, 0.2};
  for (int i = 0; i < 4; ++i) CHECK_THAT(eb.pt_eigenvalues[i], WithinAbs(sq[i], 1e-12));

  eb = entanglement_breaking_test(ChannelParams(0.6, 0.2));
  CHECK_FALSE(eb.entanglement_breaking);
  const std::array<double, 4> out{0.8, 0.8, 0.6, -0.2};
  for (int i = 0; i < 4; ++i) {
    CHECK_THAT(eb.pt_eigenvalues[i], WithinAbs(out[i], 1e-12));
    CHECK_THAT(eb.closed_form[i], WithinAbs(out[i], 1e-15));
  }
}

TEST_CASE("anti-degradability examples", "[bounds]") {
  auto ad = antidegradability_test(ChannelParams(1, 0));
  CHECK_FALSE(ad.antidegradable);
  CHECK_THAT(ad.margin, WithinAbs(1.0, 1e-15));
  CHECK_THAT(ad.choi_margin, WithinAbs(2.0, 1e-12));

  ad = antidegradability_test(ChannelParams(0.5, 0.5));
  CHECK(ad.antidegradable);
  CHECK_THAT(ad.margin, WithinAbs(0.0, 1e-15));

  ad = antidegradability_test(ChannelParams(0.25, 0.25));
  CHECK(ad.antidegradable);
  CHECK_THAT(ad.margin, WithinAbs(-1.0, 1e-15));
  CHECK_THAT(ad.choi_margin, WithinAbs(-2.0, 1e-12));
}

TEST_CASE("region classification on the simplex", "[bounds]") {
  const int n = 101;
  int eb_not_ad = 0, square_mismatch = 0;
  double worst_pt = 0.0, worst_margin = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      const ChannelParams p(i / double(n - 1), j / double(n - 1));
      const auto f = classify_regions(p);
      const auto eb = entanglement_breaking_test(p);
      for (int k = 0; k < 4; ++k)
        worst_pt = std::max(worst_pt, std::abs(eb.pt_eigenvalues[k] - eb.closed_form[k]));
      if (f.entanglement_breaking && !f.antidegradable) ++eb_not_ad;
      const bool square = p.p0() <= 0.5 + 1e-9 && p.p3() <= 0.5 + 1e-9;
      const bool inner = p.p0() <= 0.5 - 1e-9 && p.p3() <= 0.5 - 1e-9;
      if (f.entanglement_breaking != square && f.entanglement_breaking != inner)
        ++square_mismatch;
      const auto ad = antidegradability_test(p);
      worst_margin = std::max(worst_margin, std::abs(ad.choi_margin - 2 * ad.margin));
    }
  }
  CHECK(eb_not_ad == 0);
  CHECK(square_mismatch == 0);
  CHECK(worst_pt < 1e-10);
  CHECK(worst_margin < 1e-9);
}

TEST_CASE("flag bound A", "[bounds]") {
  for (double p0 : {0.0, 0.1, 0.3, 0.5}) CHECK(flag_bound_A(ChannelParams(p0, p0)) == 0.0);
  CHECK_THAT(flag_bound_A(ChannelParams(1, 0)), WithinAbs(1.0, 1e-15));
  CHECK_THAT(flag_bound_A(ChannelParams(0.9, 0.1)), WithinAbs(0.5310044064, 1e-10));
  CHECK_THAT(private_capacity_upper(ChannelParams(0.9, 0.1)), WithinAbs(0.5310044064, 1e-10));
  CHECK(private_capacity_upper(ChannelParams(0.3, 0.3)) == 0.0);
  CHECK_THAT(private_capacity_upper(ChannelParams(1, 0)), WithinAbs(1.0, 1e-15));
}

TEST_CASE("flag bound B", "[bounds]") {
  CHECK_THAT(flag_bound_B(ChannelParams(1, 0)), WithinAbs(1.0, 1e-15));
  CHECK_THAT(flag_bound_B(ChannelParams(0.25, 0.25)), WithinAbs(0.0, 1e-15));
  CHECK_THAT(flag_bound_B(ChannelParams(0.5, 0.5)), WithinAbs(1.0, 1e-15));
  CHECK(flag_bound_A(ChannelParams(0.5, 0.5)) == 0.0);
}

TEST_CASE("bounds match independent formulas and symmetry", "[bounds][symmetry]") {
  const int n = 101;
  int b_wins = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      const ChannelParams p(i / double(n - 1), j / double(n - 1));
      const double a = flag_bound_A(p), b = flag_bound_B(p);
      CHECK_THAT(a, WithinAbs(ref_A(p.p0(), p.p3()), 1e-12));
      CHECK_THAT(b, WithinAbs(ref_B(p.p0(), p.p3()), 1e-12));
      CHECK_THAT(a, WithinAbs(flag_bound_A(p.swapped()), 1e-12));
      CHECK_THAT(b, WithinAbs(flag_bound_B(p.swapped()), 1e-12));
      const auto best = best_quantum_upper_bound(p);
      const double ccl = classical_capacity(p).value;
      CHECK(best.value == std::min({a, b, ccl}));
      if (best.source == UpperBoundSource::kB) ++b_wins;
    }
  }
  CHECK(b_wins == 0);
}

TEST_CASE("best upper bound examples", "[bounds]") {
  auto best = best_quantum_upper_bound(ChannelParams(0.5, 0.5));
  CHECK(best.value == 0.0);
  CHECK(best.source == UpperBoundSource::kA);
  best = best_quantum_upper_bound(ChannelParams(1, 0));
  CHECK_THAT(best.value, WithinAbs(1.0, 1e-15));
  CHECK(best.source == UpperBoundSource::kA);
  // Near the depolarizing corner the classical capacity is smaller than A.
  best = best_quantum_upper_bound(ChannelParams(0.45, 0.05));
  CHECK(best.source == UpperBoundSource::kClassical);
  CHECK(to_string(UpperBoundSource::kClassical) == "Ccl");
  CHECK(to_string(UpperBoundSource::kA) == "A");
  CHECK(to_string(UpperBoundSource::kB) == "B");
}

TEST_CASE("subchannel degradability", "[bounds]") {
  auto d = subchannel_degradability_check(ChannelParams(0.6, 0.2));
  for (int k = 0; k < 4; ++k) {
    REQUIRE(d.degradable[k].has_value());
    CHECK(*d.degradable[k]);
  }
  d = subchannel_degradability_check(ChannelParams(0.5, 0.5));
  REQUIRE(d.degradable[0].has_value());
  CHECK(*d.degradable[0]);
  CHECK_FALSE(d.degradable[1].has_value());

  // p0 = p1: the I/X piece sits exactly on the boundary.
  d = subchannel_degradability_check(ChannelParams(0.3, 0.1));
  REQUIRE(d.degradable[2].has_value());
  CHECK(*d.degradable[2]);
  CHECK_THAT(*d.complement_margin[2], WithinAbs(0.0, 1e-12));

  // Identity/Z piece: the complement margin is -(p0 - p3)^2 / (p0 + p3)^2 up to scale.
  d = subchannel_degradability_check(ChannelParams(0.7, 0.1));
  CHECK(*d.complement_margin[0] <= 0.0);

  CHECK_THROWS_AS(subchannel_kraus(ChannelParams(1, 0), Subchannel::k1), DomainError);
  CHECK_THAT(subchannel_weight(ChannelParams(0.6, 0.2), Subchannel::k3), WithinAbs(0.3, 1e-15));
}

TEST_CASE("coherent information examples", "[bounds]") {
  CHECK_THAT(coherent_information(ChannelParams(1, 0), 0, 0), WithinAbs(1.0, 1e-12));
  CHECK_THAT(coherent_information(ChannelParams(0.5, 0.5), 0, 0), WithinAbs(0.0, 1e-12));
  CHECK_THROWS_AS(coherent_information(ChannelParams(0.5, 0.5), 0.9, 0.9), DomainError);
  CHECK_THROWS_AS(coherent_information(ChannelParams(0.5, 0.5), -0.1, 0.0), DomainError);
}

TEST_CASE("coherent information matches the generic entropies", "[bounds]") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 2000; ++t) {
    double a = u(rng), b = u(rng);
    if (a + b > 1) a = 1 - a, b = 1 - b;
    const ChannelParams p(a, b);
    const double r = u(rng);
    const double z = (2 * u(rng) - 1) * std::sqrt(1 - r * r);
    const double phi = 6.283185307179586 * u(rng);
    const BlochVector v(r * std::cos(phi), r * std::sin(phi), z);
    const double generic = von_neumann_entropy(apply_kraus(kraus_operators(p), v.state())) -
                           von_neumann_entropy(apply_kraus(complement_kraus(kraus_operators(p)),
                                                           v.state()));
    worst = std::max(worst, std::abs(coherent_information(p, r, z) - generic));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("single-shot optimizer examples", "[bounds][optimizer]") {
  auto r = single_shot_quantum_capacity(ChannelParams(1, 0), coarse());
  CHECK_THAT(r.value, WithinAbs(1.0, 1e-12));
  CHECK_THAT(r.r, WithinAbs(0.0, 1e-12));
  CHECK_THAT(r.z, WithinAbs(0.0, 1e-12));

  r = single_shot_quantum_capacity(ChannelParams(0.9, 0.1));
  CHECK_THAT(r.value, WithinAbs(0.5310044064, 1e-6));

  r = single_shot_quantum_capacity(ChannelParams(0.4, 0.4), coarse());
  CHECK_THAT(r.value, WithinAbs(0.0, 1e-12));
  CHECK(r.unclamped <= 1e-9);
}

TEST_CASE("optimizer is deterministic", "[bounds][optimizer]") {
  const ChannelParams p(0.7, 0.05);
  const auto a = single_shot_quantum_capacity(p, coarse());
  const auto b = single_shot_quantum_capacity(p, coarse());
  CHECK(a.value == b.value);
  CHECK(a.unclamped == b.unclamped);
  CHECK(a.r == b.r);
  CHECK(a.z == b.z);
}

TEST_CASE("quantum capacity interval examples", "[bounds][optimizer]") {
  auto q = quantum_capacity_interval(ChannelParams(1, 0), coarse());
  CHECK_THAT(q.lower_single_shot, WithinAbs(1.0, 1e-12));
  CHECK_THAT(q.best_upper, WithinAbs(1.0, 1e-12));
  CHECK_FALSE(q.capacity_known_zero);

  q = quantum_capacity_interval(ChannelParams(0.45, 0.45), coarse());
  CHECK(q.capacity_known_zero);
  CHECK(q.lower_single_shot == 0.0);

  q = quantum_capacity_interval(ChannelParams(0.8, 0.2));
  CHECK_THAT(q.lower_single_shot, WithinAbs(q.upper_A, 1e-6));
  CHECK_THAT(q.upper_A, WithinAbs(0.278071905113, 1e-10));
}

TEST_CASE("lower bound never exceeds the upper bound", "[bounds][optimizer]") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 40; ++t) {
    double a = u(rng), b = u(rng);
    if (a + b > 1) a = 1 - a, b = 1 - b;
    const auto q = quantum_capacity_interval(ChannelParams(a, b), coarse());
    CHECK(q.lower_single_shot <= q.best_upper + 1e-9);
    if (q.capacity_known_zero) CHECK(q.lower_unclamped <= 1e-9);
  }
}

TEST_CASE("C_cl = A boundary", "[bounds][boundary]") {
  auto e = classical_equals_A_boundary(1.0);
  REQUIRE(e.has_value());
  CHECK_THAT(*e, WithinAbs(1.0, 1e-10));

  double prev = -1.0;
  for (int k = 1; k <= 9; ++k) {
    const double s = k / 10.0;
    const auto root = classical_equals_A_boundary(s);
    if (!root) continue;
    const auto p = ChannelParams::from_sum_and_asymmetry(s, *root);
    CHECK(std::abs(flag_bound_A(p) - classical_capacity(p).value) < 1e-9);
    prev = *root;
  }
  CHECK(prev >= 0.0);
  // Depolarizing point: A = C_cl = 0 at eps = 0.
  e = classical_equals_A_boundary(0.5);
  REQUIRE(e.has_value());
  CHECK_THAT(*e, WithinAbs(0.0, 1e-10));
  CHECK_THROWS_AS(classical_equals_A_boundary(0.0), DomainError);
  CHECK_THROWS_AS(classical_equals_A_boundary(1.2), DomainError);
}

TEST_CASE("anti-degradable boundary", "[bounds][boundary]") {
  // The contour only reaches s >= 2/3.
  CHECK_FALSE(antidegradable_boundary(0.3).has_value());
  CHECK_FALSE(antidegradable_boundary(0.6).has_value());
  std::optional<double> e;
  for (double s : {0.7, 0.8, 0.9, 1.0}) {
    e = antidegradable_boundary(s);
    REQUIRE(e.has_value());
    const auto ad = antidegradability_test(ChannelParams::from_sum_and_asymmetry(s, *e));
    CHECK(std::abs(ad.margin) < 1e-9);
  }
}
