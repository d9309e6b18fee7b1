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

#include "covpauli/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "covpauli/errors.hpp"

namespace covpauli {

namespace {

constexpr double kSimplexSlack = 1e-12;

std::string fmt_params(double p0, double p3) {
  return "(p0=" + std::to_string(p0) + ", p3=" + std::to_string(p3) + ")";
}

}  // namespace

ChannelParams::ChannelParams(double p0, double p3) : p0_(p0), p3_(p3) {
  if (!std::isfinite(p0) || !std::isfinite(p3)) {
    throw ValidationError("channel parameters must be finite");
  }
  if (p0 < 0.0) throw ValidationError("p0 must be >= 0 " + fmt_params(p0, p3));
  if (p3 < 0.0) throw ValidationError("p3 must be >= 0 " + fmt_params(p0, p3));
  if (p0 + p3 > 1.0 + kSimplexSlack) {
    throw ValidationError("p0 + p3 must be <= 1 " + fmt_params(p0, p3));
  }
  p1_ = std::max(0.0, 0.5 * (1.0 - p0 - p3));
}

double ChannelParams::epsilon() const {
  const double s = p0_ + p3_;
  return s > 0.0 ? (p0_ - p3_) / s : 0.0;
}

ChannelParams ChannelParams::from_sum_and_asymmetry(double s, double eps) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("p0 + p3 must lie in [0, 1]");
  if (!(eps >= -1.0 && eps <= 1.0)) throw DomainError("asymmetry must lie in [-1, 1]");
  return ChannelParams(0.5 * s * (1.0 + eps), 0.5 * s * (1.0 - eps));
}

BlochVector::BlochVector(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  if (!(x * x + y * y + z * z <= 1.0 + 1e-12)) {
    throw ValidationError("Bloch vector lies outside the unit ball");
  }
}

double BlochVector::r() const { return std::sqrt(x * x + y * y); }

KrausSet kraus_operators(const ChannelParams& p) {
  return KrausSet(2, 2,
                  {std::sqrt(p.p0()) * pauli::identity(),
                   std::sqrt(p.p1()) * pauli::x(),
                   std::sqrt(p.p1()) * pauli::y(),
                   std::sqrt(p.p3()) * pauli::z()});
}

DensityMatrix channel_output(const ChannelParams& p, const BlochVector& b) {
  const double zc = p.p0() + p.p3() - 2.0 * p.p1();
  const double xc = p.p0() - p.p3();
  CMatrix m(2, 2);
  m << 0.5 * (1.0 + zc * b.z), 0.5 * xc * Complex(b.x, -b.y),
      0.5 * xc * Complex(b.x, b.y), 0.5 * (1.0 - zc * b.z);
  return DensityMatrix::unchecked(std::move(m));
}

std::pair<double, double> channel_output_spectrum(const ChannelParams& p,
                                                  const BlochVector& b) {
  const double d = p.p0() - p.p3();
  const double c = 2.0 * p.p0() + 2.0 * p.p3() - 1.0;
  const double root = std::sqrt(d * d * (b.x * b.x + b.y * b.y) + c * c * b.z * b.z);
  return {0.5 * (1.0 + root), 0.5 * (1.0 - root)};
}

DensityMatrix complement_output(const ChannelParams& p, const BlochVector& b) {
  const double p0 = p.p0(), p1 = p.p1(), p3 = p.p3();
  const double a01 = std::sqrt(p0 * p1);
  const double a03 = std::sqrt(p0 * p3);
  const double a13 = std::sqrt(p1 * p3);
  const Complex i(0.0, 1.0);
  CMatrix m(4, 4);
  m << p0, a01 * b.x, a01 * b.y, a03 * b.z,
      a01 * b.x, p1, -i * p1 * b.z, i * a13 * b.y,
      a01 * b.y, i * p1 * b.z, p1, -i * a13 * b.x,
      a03 * b.z, -i * a13 * b.y, i * a13 * b.x, p3;
  return DensityMatrix::unchecked(std::move(m));
}

CMatrix rotation_z(double theta) {
  CMatrix u = CMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, 0.5 * theta);
  u(1, 1) = std::polar(1.0, -0.5 * theta);
  return u;
}

CMatrix environment_rotation(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  CMatrix omega = CMatrix::Identity(4, 4);
  omega(1, 1) = c;
  omega(1, 2) = -s;
  omega(2, 1) = s;
  omega(2, 2) = c;
  return omega;
}

CMatrix conjugation_relabeling() {
  CMatrix s = CMatrix::Identity(4, 4);
  s(2, 2) = -1.0;
  return s;
}

double verify_channel_covariance(const ChannelParams& p, double theta,
                                 const BlochVector& b) {
  const KrausSet k = kraus_operators(p);
  const CMatrix u = rotation_z(theta);
  const CMatrix rho = b.state().matrix();
  const CMatrix lhs = apply_kraus_map(k, u * rho * u.adjoint());
  const CMatrix rhs = u * apply_kraus_map(k, rho) * u.adjoint();
  return frobenius_distance(lhs, rhs);
}

double verify_complement_covariance(const ChannelParams& p, double theta,
                                    const BlochVector& b) {
  const double c = std::cos(theta), s = std::sin(theta);
  const BlochVector rotated(b.x * c + b.y * s, -b.x * s + b.y * c, b.z);
  const CMatrix omega = environment_rotation(theta);
  const CMatrix lhs = complement_output(p, rotated).matrix();
  const CMatrix rhs = omega.adjoint() * complement_output(p, b).matrix() * omega;
  return frobenius_distance(lhs, rhs);
}

double verify_z2_exchange(const ChannelParams& swapped, const ChannelParams& p,
                          const BlochVector& b) {
  if (swapped.p0() != p.p3() || swapped.p3() != p.p0()) {
    throw ValidationError("exchange check needs (p0, p3) and (p3, p0)");
  }
  const CMatrix z = pauli::z();
  const CMatrix rho = b.state().matrix();
  const CMatrix lhs = apply_kraus_map(kraus_operators(swapped), rho);
  const CMatrix rhs = z * apply_kraus_map(kraus_operators(p), rho) * z;
  return frobenius_distance(lhs, rhs);
}

ConjugationResiduals verify_conjugation_property(const ChannelParams& p,
                                                 const BlochVector& b) {
  const KrausSet k = kraus_operators(p);
  const KrausSet kc = complement_kraus(k);
  const CMatrix rho = b.state().matrix();
  const CMatrix rho_conj = rho.conjugate();
  const CMatrix s = conjugation_relabeling();

  ConjugationResiduals out;
  out.channel = frobenius_distance(apply_kraus_map(k, rho_conj),
                                   apply_kraus_map(k, rho).conjugate());
  out.complement = frobenius_distance(
      apply_kraus_map(kc, rho_conj),
      s.transpose() * apply_kraus_map(kc, rho).conjugate() * s.conjugate());
  return out;
}

}  // namespace covpauli
