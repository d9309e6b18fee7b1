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

#include <array>
#include <optional>
#include <string_view>

#include "covpauli/channel.hpp"

namespace covpauli {

// ---------------------------------------------------------------------------
// Zero-capacity regions

struct EntanglementBreakingResult {
  bool entanglement_breaking = false;
  /// Numeric eigenvalues of the partially transposed Choi matrix, descending.
  std::array<double, 4> pt_eigenvalues{};
  /// {p0 + p3, p0 + p3, 1 - 2 p3, 1 - 2 p0}, sorted descending.
  std::array<double, 4> closed_form{};
};

/// PPT test on the Choi matrix. Throws ConsistencyError if the numeric and
/// closed-form spectra differ by more than 1e-10.
EntanglementBreakingResult entanglement_breaking_test(const ChannelParams& p);

/// tr(J^2) - 4 sqrt(det J) - tr(Lambda(I)^2) for a qubit-to-qubit channel
/// with Choi matrix J (trace 2). Non-positive means anti-degradable.
double antidegradability_choi_margin(const KrausSet& k);

struct AntidegradabilityResult {
  bool antidegradable = false;
  /// 2(p0^2+p3^2) + (1-p0-p3)^2 - 4(1-p0-p3) sqrt(p0 p3) - 1.
  double margin = 0.0;
  /// Same criterion evaluated on the Choi matrix; equals 2 * margin.
  double choi_margin = 0.0;
};

AntidegradabilityResult antidegradability_test(const ChannelParams& p);

struct RegionFlags {
  bool entanglement_breaking = false;
  bool antidegradable = false;
  std::array<double, 4> pt_eigenvalues{};
  double ad_margin = 0.0;
};

RegionFlags classify_regions(const ChannelParams& p);

// ---------------------------------------------------------------------------
// Flag-extension upper bounds

/// (p0 + p3) (1 - h(p0 / (p0 + p3))), zero when p0 + p3 = 0.
double flag_bound_A(const ChannelParams& p);

/// (p0 + p1)(1 - h(p1/(p0 + p1))) + (p1 + p3)(1 - h(p1/(p1 + p3))).
double flag_bound_B(const ChannelParams& p);

enum class UpperBoundSource { kA, kB, kClassical };

std::string_view to_string(UpperBoundSource s);

struct BestUpperBound {
  double value = 0.0;
  UpperBoundSource source = UpperBoundSource::kA;
};

/// min{A, B, C_cl}. Labels prefer A, then C_cl, then B; a later candidate
/// takes the label only when it is lower by more than 1e-12.
BestUpperBound best_quantum_upper_bound(const ChannelParams& p);

/// Private capacity bound; the same expression as bound A.
double private_capacity_upper(const ChannelParams& p);

/// Convex pieces used by the two flag extensions:
///   Lambda = (p0+p3) L0 + 2 p1 L1 = (p0+p1) L2 + (p1+p3) L3.
enum class Subchannel { k0, k1, k2, k3 };

double subchannel_weight(const ChannelParams& p, Subchannel which);

/// Kraus operators of a normalized piece. Throws DomainError when the
/// piece has zero weight.
KrausSet subchannel_kraus(const ChannelParams& p, Subchannel which);

struct SubchannelDegradability {
  /// nullopt for zero-weight pieces.
  std::array<std::optional<bool>, 4> degradable{};
  /// Anti-degradability margin of each piece's complement.
  std::array<std::optional<double>, 4> complement_margin{};
};

/// Degradability of each piece, decided by anti-degradability of its
/// complement built with complement_kraus.
SubchannelDegradability subchannel_degradability_check(const ChannelParams& p);

// ---------------------------------------------------------------------------
// Single-shot lower bound

/// S(Lambda(rho)) - S(Lambda^c(rho)) at Bloch point (r, 0, z).
/// Throws DomainError for r < 0 or r^2 + z^2 > 1.
double coherent_information(const ChannelParams& p, double r, double z);

struct OptimizerConfig {
  int grid_resolution = 201;
  double refine_tolerance = 1e-9;
  int refine_max_iterations = 10000;
};

struct SingleShotResult {
  double value = 0.0;      // max(0, unclamped)
  double unclamped = 0.0;  // best coherent information found
  double r = 0.0;
  double z = 0.0;
};

/// Grid search over the half-disc r in [0,1], z in [-1,1], r^2 + z^2 <= 1,
/// followed by compass search from the best grid point. Grid ties go to the
/// smallest r, then the smallest z.
SingleShotResult single_shot_quantum_capacity(const ChannelParams& p,
                                              const OptimizerConfig& cfg = {});

struct QuantumCapacityBounds {
  double upper_A = 0.0;
  double upper_B = 0.0;
  double classical_upper = 0.0;
  double best_upper = 0.0;
  UpperBoundSource best_upper_source = UpperBoundSource::kA;
  double lower_single_shot = 0.0;
  double lower_unclamped = 0.0;
  double argmax_r = 0.0;
  double argmax_z = 0.0;
  bool capacity_known_zero = false;
};

QuantumCapacityBounds quantum_capacity_interval(const ChannelParams& p,
                                                const OptimizerConfig& cfg = {});

// ---------------------------------------------------------------------------
// Boundary curves, parameterized by s = p0 + p3 and eps = (p0 - p3) / s

/// Root in eps in [0, 1] of A - C_cl at fixed s, by bisection to width
/// `tol`. nullopt when A - C_cl does not change sign. Throws DomainError
/// for s outside (0, 1].
std::optional<double> classical_equals_A_boundary(double s, double tol = 1e-10);

/// Root in eps in [0, 1] of the anti-degradability margin at fixed s.
/// nullopt when the whole segment is anti-degradable.
std::optional<double> antidegradable_boundary(double s, double tol = 1e-10);

}  // namespace covpauli
