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

#include "covpauli/capacity_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/LU>

#include "covpauli/capacity_exact.hpp"
#include "covpauli/errors.hpp"

namespace covpauli {

namespace {

constexpr double kPtAgreementTol = 1e-10;
constexpr double kAdTol = 1e-12;
constexpr double kSourceTieTol = 1e-12;
// Margins this close to zero may legitimately disagree in sign between the
// closed form and the Choi evaluation.
constexpr double kAdAgreementBand = 1e-9;

double weighted_flag_term(double weight, double part) {
  if (weight <= 0.0) return 0.0;
  return weight * (1.0 - binary_entropy(std::clamp(part / weight, 0.0, 1.0)));
}

/// S(Lambda(rho)) - S(Lambda^c(rho)) at (r, 0, z) without argument checks.
double coherent_information_unchecked(const ChannelParams& p, double r, double z) {
  const double p0 = p.p0(), p1 = p.p1(), p3 = p.p3();

  const double d = p0 - p3;
  const double c = 2.0 * p0 + 2.0 * p3 - 1.0;
  const double root = std::sqrt(d * d * r * r + c * c * z * z);
  const std::array<double, 2> lambda{0.5 * (1.0 + root), 0.5 * (1.0 - root)};

  const double a01 = std::sqrt(p0 * p1);
  const double a03 = std::sqrt(p0 * p3);
  const double a13 = std::sqrt(p1 * p3);
  // Environment output at y = 0, conjugated by diag(1, 1, i, 1) so that it is
  // real symmetric. The spectrum is unchanged.
  std::array<double, 16> env{
      p0,       a01 * r,  0.0,        a03 * z,
      a01 * r,  p1,       p1 * z,     0.0,
      0.0,      p1 * z,   p1,         -a13 * r,
      a03 * z,  0.0,      -a13 * r,   p3};
  std::array<double, 4> mu{};
  jacobi_eigenvalues_symmetric(env, 4, mu);

  return entropy_of_spectrum(lambda) - entropy_of_spectrum(mu);
}

/// Bisection for a root of f on [0, 1] with f(0) <= 0 <= f(1) expected.
std::optional<double> bisect_unit_interval(const std::function<double(double)>& f,
                                           double tol) {
  constexpr double kZero = 1e-12;
  double lo = 0.0, hi = 1.0;
  double flo = f(lo), fhi = f(hi);
  if (std::abs(flo) <= kZero) return lo;
  if (std::abs(fhi) <= kZero) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) return std::nullopt;
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    // Keep going past the width target while the residual is still visible.
    if (hi - lo < tol && (std::abs(fm) <= kZero || hi - lo < 1e-15)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

// ---------------------------------------------------------------------------

EntanglementBreakingResult entanglement_breaking_test(const ChannelParams& p) {
  const HermitianMatrix pt = partial_transpose(choi_matrix(kraus_operators(p)));
  const auto numeric = eigenvalues_hermitian(pt);

  EntanglementBreakingResult out;
  std::copy(numeric.begin(), numeric.end(), out.pt_eigenvalues.begin());
  const double s = p.p0() + p.p3();
  out.closed_form = {s, s, 1.0 - 2.0 * p.p3(), 1.0 - 2.0 * p.p0()};
  std::sort(out.closed_form.begin(), out.closed_form.end(), std::greater<>());
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(out.pt_eigenvalues[k] - out.closed_form[k]) > kPtAgreementTol) {
      throw ConsistencyError("partial-transpose spectrum disagrees with closed form");
    }
  }
  out.entanglement_breaking = out.pt_eigenvalues[3] >= -kPositivityTol;
  return out;
}

double antidegradability_choi_margin(const KrausSet& k) {
  if (k.dim_in() != 2 || k.dim_out() != 2) {
    throw UnsupportedDimensionError("anti-degradability criterion needs a qubit-to-qubit channel");
  }
  const CMatrix choi = choi_matrix(k).matrix();
  const double tr_sq = (choi * choi).trace().real();
  const double det = std::max(0.0, choi.determinant().real());
  const CMatrix out_identity = apply_kraus_map(k, CMatrix::Identity(2, 2));
  const double purity = (out_identity * out_identity).trace().real();
  return tr_sq - 4.0 * std::sqrt(det) - purity;
}

AntidegradabilityResult antidegradability_test(const ChannelParams& p) {
  const double p0 = p.p0(), p3 = p.p3();
  const double rest = 1.0 - p0 - p3;
  AntidegradabilityResult out;
  out.margin = 2.0 * (p0 * p0 + p3 * p3) + rest * rest -
               4.0 * rest * std::sqrt(p0 * p3) - 1.0;
  out.choi_margin = antidegradability_choi_margin(kraus_operators(p));
  out.antidegradable = out.margin <= kAdTol;
  const bool choi_ad = out.choi_margin <= 2.0 * kAdTol;
  if (choi_ad != out.antidegradable && std::abs(out.margin) > kAdAgreementBand) {
    throw ConsistencyError("anti-degradability criteria disagree");
  }
  return out;
}

RegionFlags classify_regions(const ChannelParams& p) {
  const auto eb = entanglement_breaking_test(p);
  const auto ad = antidegradability_test(p);
  return RegionFlags{eb.entanglement_breaking, ad.antidegradable,
                     eb.pt_eigenvalues, ad.margin};
}

// ---------------------------------------------------------------------------

double flag_bound_A(const ChannelParams& p) {
  return weighted_flag_term(p.p0() + p.p3(), p.p0());
}

double flag_bound_B(const ChannelParams& p) {
  return weighted_flag_term(p.p0() + p.p1(), p.p1()) +
         weighted_flag_term(p.p1() + p.p3(), p.p1());
}

std::string_view to_string(UpperBoundSource s) {
  switch (s) {
    case UpperBoundSource::kA:
      return "A";
    case UpperBoundSource::kB:
      return "B";
    case UpperBoundSource::kClassical:
      return "Ccl";
  }
  return "?";
}

BestUpperBound best_quantum_upper_bound(const ChannelParams& p) {
  const double a = flag_bound_A(p);
  const double b = flag_bound_B(p);
  const double ccl = classical_capacity(p).value;

  BestUpperBound out{a, UpperBoundSource::kA};
  double labeled = a;
  if (ccl < labeled - kSourceTieTol) {
    out.source = UpperBoundSource::kClassical;
    labeled = ccl;
  }
  if (b < labeled - kSourceTieTol) out.source = UpperBoundSource::kB;
  out.value = std::min({a, b, ccl});
  return out;
}

double private_capacity_upper(const ChannelParams& p) { return flag_bound_A(p); }

double subchannel_weight(const ChannelParams& p, Subchannel which) {
  switch (which) {
    case Subchannel::k0:
      return p.p0() + p.p3();
    case Subchannel::k1:
      return 2.0 * p.p1();
    case Subchannel::k2:
      return p.p0() + p.p1();
    case Subchannel::k3:
      return p.p1() + p.p3();
  }
  return 0.0;
}

KrausSet subchannel_kraus(const ChannelParams& p, Subchannel which) {
  const double w = subchannel_weight(p, which);
  if (!(w > 0.0)) throw DomainError("subchannel has zero weight");
  auto scaled = [w](double prob, const CMatrix& m) -> CMatrix {
    return std::sqrt(prob / w) * m;
  };
  switch (which) {
    case Subchannel::k0:
      return KrausSet(2, 2, {scaled(p.p0(), pauli::identity()), scaled(p.p3(), pauli::z())});
    case Subchannel::k1:
      return KrausSet(2, 2, {std::sqrt(0.5) * pauli::x(), std::sqrt(0.5) * pauli::y()});
    case Subchannel::k2:
      return KrausSet(2, 2, {scaled(p.p0(), pauli::identity()), scaled(p.p1(), pauli::x())});
    case Subchannel::k3:
      return KrausSet(2, 2, {scaled(p.p1(), pauli::y()), scaled(p.p3(), pauli::z())});
  }
  throw DomainError("unknown subchannel");
}

SubchannelDegradability subchannel_degradability_check(const ChannelParams& p) {
  SubchannelDegradability out;
  constexpr std::array kAll{Subchannel::k0, Subchannel::k1, Subchannel::k2,
                            Subchannel::k3};
  for (std::size_t idx = 0; idx < kAll.size(); ++idx) {
    if (!(subchannel_weight(p, kAll[idx]) > 0.0)) continue;
    const KrausSet comp = complement_kraus(subchannel_kraus(p, kAll[idx]));
    const double margin = antidegradability_choi_margin(comp);
    out.complement_margin[idx] = margin;
    out.degradable[idx] = margin <= kAdTol;
  }
  return out;
}

// ---------------------------------------------------------------------------

double coherent_information(const ChannelParams& p, double r, double z) {
  if (!(r >= 0.0 && r * r + z * z <= 1.0 + 1e-12)) {
    throw DomainError("(r, z) lies outside the Bloch half-disc");
  }
  return coherent_information_unchecked(p, r, z);
}

SingleShotResult single_shot_quantum_capacity(const ChannelParams& p,
                                              const OptimizerConfig& cfg) {
  const int n = std::max(cfg.grid_resolution, 2);
  const double dr = 1.0 / (n - 1);
  const double dz = 2.0 / (n - 1);

  double best = -std::numeric_limits<double>::infinity();
  double best_r = 0.0, best_z = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = i * dr;
    for (int j = 0; j < n; ++j) {
      const double z = -1.0 + j * dz;
      if (r * r + z * z > 1.0 + 1e-12) continue;
      const double val = coherent_information_unchecked(p, r, z);
      if (val > best) {
        best = val;
        best_r = r;
        best_z = z;
      }
    }
  }

  // Compass search in (radius, polar angle): the half-disc is a box there,
  // so moves along the sphere are not blocked by the boundary.
  double t = std::min(1.0, std::hypot(best_r, best_z));
  double phi = std::atan2(best_r, best_z);
  double step = dr;
  bool moved = false;
  auto objective = [&p](double tt, double pp) {
    return coherent_information_unchecked(p, tt * std::sin(pp), tt * std::cos(pp));
  };
  for (int iter = 0; iter < cfg.refine_max_iterations && step >= cfg.refine_tolerance;
       ++iter) {
    const std::array<std::array<double, 2>, 4> moves{{
        {t + step, phi}, {t - step, phi}, {t, phi + step}, {t, phi - step}}};
    bool improved = false;
    for (const auto& mv : moves) {
      const double tt = std::clamp(mv[0], 0.0, 1.0);
      const double pp = std::clamp(mv[1], 0.0, std::numbers::pi);
      if (tt == t && pp == phi) continue;
      const double val = objective(tt, pp);
      if (val > best) {
        best = val;
        t = tt;
        phi = pp;
        improved = true;
        moved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
  if (moved) {
    best_r = t * std::sin(phi);
    best_z = t * std::cos(phi);
  }

  SingleShotResult out;
  out.unclamped = best;
  out.value = std::max(0.0, best);
  out.r = best_r;
  out.z = best_z;
  return out;
}

QuantumCapacityBounds quantum_capacity_interval(const ChannelParams& p,
                                                const OptimizerConfig& cfg) {
  QuantumCapacityBounds out;
  out.upper_A = flag_bound_A(p);
  out.upper_B = flag_bound_B(p);
  out.classical_upper = classical_capacity(p).value;
  const auto best = best_quantum_upper_bound(p);
  out.best_upper = best.value;
  out.best_upper_source = best.source;

  const auto lower = single_shot_quantum_capacity(p, cfg);
  out.lower_unclamped = lower.unclamped;
  out.argmax_r = lower.r;
  out.argmax_z = lower.z;
  out.capacity_known_zero = antidegradability_test(p).antidegradable;
  out.lower_single_shot = out.capacity_known_zero ? 0.0 : lower.value;
  return out;
}

// ---------------------------------------------------------------------------

std::optional<double> classical_equals_A_boundary(double s, double tol) {
  if (!(s > 0.0 && s <= 1.0)) {
    throw DomainError("p0 + p3 = " + std::to_string(s) + " outside (0, 1]");
  }
  return bisect_unit_interval(
      [s](double eps) {
        const auto p = ChannelParams::from_sum_and_asymmetry(s, eps);
        return flag_bound_A(p) - classical_capacity(p).value;
      },
      tol);
}

std::optional<double> antidegradable_boundary(double s, double tol) {
  if (!(s > 0.0 && s <= 1.0)) {
    throw DomainError("p0 + p3 = " + std::to_string(s) + " outside (0, 1]");
  }
  auto margin = [s](double eps) {
    return antidegradability_test(ChannelParams::from_sum_and_asymmetry(s, eps)).margin;
  };
  return bisect_unit_interval(margin, tol);
}

}  // namespace covpauli
