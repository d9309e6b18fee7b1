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

#include "covpauli/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "covpauli/errors.hpp"

namespace covpauli {

namespace {

constexpr int kMaxJacobiSweeps = 64;

double max_hermitian_defect(const CMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

double off_diagonal_norm(std::span<const Complex> a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += std::norm(a[i * n + j]);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

HermitianMatrix::HermitianMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw ValidationError("Hermitian matrix must be square and non-empty");
  }
  const double defect = max_hermitian_defect(m_);
  if (!(defect <= kHermitianTol)) {
    throw ValidationError("matrix is not Hermitian (max |m_ij - conj(m_ji)| = " +
                          std::to_string(defect) + ")");
  }
}

HermitianMatrix HermitianMatrix::unchecked(CMatrix m) {
  return HermitianMatrix(std::move(m), NoCheck{});
}

DensityMatrix::DensityMatrix(CMatrix m) : HermitianMatrix(std::move(m)) {
  const double tr = trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw ValidationError("density matrix trace is " + std::to_string(tr));
  }
  const auto eigs = eigenvalues_hermitian(*this);
  if (eigs.back() < -kPositivityTol) {
    throw NotAStateError("density matrix has eigenvalue " +
                         std::to_string(eigs.back()));
  }
}

DensityMatrix DensityMatrix::unchecked(CMatrix m) {
  return DensityMatrix(std::move(m), NoCheck{});
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
  CMatrix m(2, 2);
  m << Complex(0.5 * (1.0 + z), 0.0), Complex(0.5 * x, -0.5 * y),
      Complex(0.5 * x, 0.5 * y), Complex(0.5 * (1.0 - z), 0.0);
  if (x * x + y * y + z * z > 1.0 + 1e-12) {
    throw ValidationError("Bloch vector lies outside the unit ball");
  }
  return DensityMatrix(std::move(m), NoCheck{});
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  CMatrix m = CMatrix::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix(std::move(m), NoCheck{});
}

KrausSet::KrausSet(Eigen::Index dim_in, Eigen::Index dim_out,
                   std::vector<CMatrix> ops)
    : dim_in_(dim_in), dim_out_(dim_out), ops_(std::move(ops)) {
  if (dim_in_ <= 0 || dim_out_ <= 0 || ops_.empty()) {
    throw ValidationError("Kraus set needs positive dimensions and operators");
  }
  CMatrix sum = CMatrix::Zero(dim_in_, dim_in_);
  for (const auto& k : ops_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw ValidationError("Kraus operator has shape " +
                            std::to_string(k.rows()) + "x" +
                            std::to_string(k.cols()) + ", expected " +
                            std::to_string(dim_out_) + "x" +
                            std::to_string(dim_in_));
    }
    sum.noalias() += k.adjoint() * k;
  }
  const double defect = (sum - CMatrix::Identity(dim_in_, dim_in_)).norm();
  if (!(defect <= kCompletenessTol)) {
    throw ValidationError("Kraus completeness violated by " +
                          std::to_string(defect));
  }
}

namespace pauli {

CMatrix identity() { return CMatrix::Identity(2, 2); }

CMatrix x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix y() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

CMatrix z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

void jacobi_eigenvalues(std::span<Complex> a, std::size_t n,
                        std::span<double> out) {
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < kJacobiOffDiagTol) break;
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a[p * n + q];
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        rotated = true;
        // Phase the (p,q) element real, then apply a real Jacobi rotation.
        const Complex phase = apq / g;
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = [[c, s], [-s conj(phase), c conj(phase)]] on the (p,q) plane.
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const Complex akp = a[k * n + p];
          const Complex akq = a[k * n + q];
          a[k * n + p] = akp * jpp + akq * jqp;
          a[k * n + q] = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^dagger A
          const Complex apk = a[p * n + k];
          const Complex aqk = a[q * n + k];
          a[p * n + k] = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a[q * n + k] = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
      }
    }
    if (!rotated) break;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i].real();
}

void jacobi_eigenvalues_symmetric(std::span<double> a, std::size_t n,
                                  std::span<double> out) {
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a[i * n + j] * a[i * n + j];
    if (std::sqrt(off) < kJacobiOffDiagTol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i];
}

std::vector<double> eigenvalues_hermitian(const HermitianMatrix& m) {
  const auto n = static_cast<std::size_t>(m.dim());
  std::vector<Complex> buffer(m.matrix().data(), m.matrix().data() + n * n);
  std::vector<double> eigs(n);
  jacobi_eigenvalues(buffer, n, eigs);
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -kPositivityTol) {
      throw NotAStateError("negative eigenvalue " + std::to_string(lambda) +
                           " in entropy evaluation");
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const auto eigs = eigenvalues_hermitian(rho);
  return entropy_of_spectrum(eigs);
}

double binary_entropy(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    throw DomainError("binary entropy argument " + std::to_string(x) +
                      " outside [0, 1]");
  }
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

CMatrix apply_kraus_map(const KrausSet& k, const CMatrix& m) {
  if (m.rows() != k.dim_in() || m.cols() != k.dim_in()) {
    throw ValidationError("input operator dimension " +
                          std::to_string(m.rows()) +
                          " does not match channel input dimension " +
                          std::to_string(k.dim_in()));
  }
  CMatrix out = CMatrix::Zero(k.dim_out(), k.dim_out());
  for (const auto& op : k.ops()) out.noalias() += op * m * op.adjoint();
  return out;
}

DensityMatrix apply_kraus(const KrausSet& k, const DensityMatrix& rho) {
  CMatrix out = apply_kraus_map(k, rho.matrix());
  // Symmetrize away rounding so the output is Hermitian to the last bit.
  CMatrix herm = 0.5 * (out + out.adjoint());
  return DensityMatrix::unchecked(std::move(herm));
}

KrausSet complement_kraus(const KrausSet& k) {
  const auto n_ops = static_cast<Eigen::Index>(k.size());
  std::vector<CMatrix> r;
  r.reserve(static_cast<std::size_t>(k.dim_out()));
  for (Eigen::Index i = 0; i < k.dim_out(); ++i) {
    CMatrix ri(n_ops, k.dim_in());
    for (Eigen::Index alpha = 0; alpha < n_ops; ++alpha) {
      ri.row(alpha) = k.ops()[static_cast<std::size_t>(alpha)].row(i);
    }
    r.push_back(std::move(ri));
  }
  return KrausSet(k.dim_in(), n_ops, std::move(r));
}

HermitianMatrix choi_matrix(const KrausSet& k) {
  if (k.dim_in() != 2) {
    throw UnsupportedDimensionError("Choi matrix requires qubit input, got " +
                                    std::to_string(k.dim_in()));
  }
  const Eigen::Index d = k.dim_out();
  CMatrix choi = CMatrix::Zero(2 * d, 2 * d);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) {
      CMatrix unit = CMatrix::Zero(2, 2);
      unit(i, j) = 1.0;
      const CMatrix block = apply_kraus_map(k, unit);
      for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
          choi(i * d + a, j * d + b) = block(a, b);
        }
      }
    }
  }
  return HermitianMatrix::unchecked(std::move(choi));
}

HermitianMatrix partial_transpose(const HermitianMatrix& m) {
  if (m.dim() != 4) {
    throw UnsupportedDimensionError("partial transpose requires a 4x4 matrix, got " +
                                    std::to_string(m.dim()));
  }
  CMatrix out(4, 4);
  for (Eigen::Index a = 0; a < 2; ++a) {
    for (Eigen::Index i = 0; i < 2; ++i) {
      for (Eigen::Index b = 0; b < 2; ++b) {
        for (Eigen::Index j = 0; j < 2; ++j) {
          out(a * 2 + i, b * 2 + j) = m(a * 2 + j, b * 2 + i);
        }
      }
    }
  }
  return HermitianMatrix::unchecked(std::move(out));
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm();
}

}  // namespace covpauli
