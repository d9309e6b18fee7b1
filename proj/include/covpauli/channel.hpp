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
#include <utility>

#include "covpauli/linalg.hpp"

namespace covpauli {

/// Point of the covariant Pauli family
///   Lambda(rho) = p0 rho + p1 (X rho X + Y rho Y) + p3 Z rho Z,
/// with p1 = p2 = (1 - p0 - p3) / 2 derived, never stored independently.
class ChannelParams {
 public:
  /// Throws ValidationError unless p0 >= 0, p3 >= 0 and p0 + p3 <= 1.
  /// Sums exceeding 1 by at most 1e-12 are accepted and give p1 = 0.
  ChannelParams(double p0, double p3);

  double p0() const { return p0_; }
  double p3() const { return p3_; }
  double p1() const { return p1_; }
  double p2() const { return p1_; }

  /// (p0 - p3) / (p0 + p3); defined as 0 when p0 + p3 = 0.
  double epsilon() const;

  /// The same channel with p0 and p3 exchanged.
  ChannelParams swapped() const { return ChannelParams(p3_, p0_); }

  /// p0 = s (1 + eps) / 2, p3 = s (1 - eps) / 2.
  static ChannelParams from_sum_and_asymmetry(double s, double eps);

 private:
  double p0_;
  double p3_;
  double p1_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  BlochVector() = default;
  /// Throws ValidationError when x^2 + y^2 + z^2 > 1 + 1e-12.
  BlochVector(double x_, double y_, double z_);

  double r() const;
  DensityMatrix state() const { return DensityMatrix::from_bloch(x, y, z); }
};

/// [sqrt(p0) I, sqrt(p1) X, sqrt(p1) Y, sqrt(p3) Z], in that order. The
/// complement's printed matrices depend on this ordering.
KrausSet kraus_operators(const ChannelParams& p);

DensityMatrix channel_output(const ChannelParams& p, const BlochVector& b);

/// (lambda_+, lambda_-) of the channel output.
std::pair<double, double> channel_output_spectrum(const ChannelParams& p,
                                                  const BlochVector& b);

/// Closed-form 4x4 environment output for the canonical Kraus ordering.
DensityMatrix complement_output(const ChannelParams& p, const BlochVector& b);

/// U_z(theta) = exp(i theta Z / 2).
CMatrix rotation_z(double theta);

/// Block rotation acting on the (X, Y) Kraus labels of the environment.
CMatrix environment_rotation(double theta);

/// Kraus relabeling matrix with K_alpha^* = sum_beta S_{alpha beta} K_beta:
/// diag(1, 1, -1, 1).
CMatrix conjugation_relabeling();

/// || Lambda(U rho U^dagger) - U Lambda(rho) U^dagger ||_F.
double verify_channel_covariance(const ChannelParams& p, double theta,
                                 const BlochVector& b);

/// || Lambda^c(rho_{x',y',z}) - Omega^dagger Lambda^c(rho_{x,y,z}) Omega ||_F
/// with (x', y') = (x cos t + y sin t, -x sin t + y cos t).
double verify_complement_covariance(const ChannelParams& p, double theta,
                                    const BlochVector& b);

/// || Lambda_{swapped}(rho) - Z Lambda_{p}(rho) Z ||_F.
double verify_z2_exchange(const ChannelParams& swapped, const ChannelParams& p,
                          const BlochVector& b);

struct ConjugationResiduals {
  double channel = 0.0;     // || Lambda(rho^*) - Lambda(rho)^* ||_F
  double complement = 0.0;  // || Lambda^c(rho^*) - S^T Lambda^c(rho)^* S^* ||_F
};

ConjugationResiduals verify_conjugation_property(const ChannelParams& p,
                                                 const BlochVector& b);

}  // namespace covpauli
