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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace covpauli {

using Complex = std::complex<double>;
using CMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kJacobiOffDiagTol = 1e-13;

/// Dense complex matrix equal to its conjugate transpose (within
/// kHermitianTol, absolute, entrywise).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(CMatrix m);

  /// Skips the Hermiticity check. For matrices that are Hermitian by
  /// construction (outputs of completely positive maps).
  static HermitianMatrix unchecked(CMatrix m);

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }

 protected:
  struct NoCheck {};
  HermitianMatrix(CMatrix m, NoCheck) : m_(std::move(m)) {}

  CMatrix m_;
};

/// Unit-trace positive semidefinite Hermitian matrix.
class DensityMatrix : public HermitianMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  /// Skips validation; used for outputs of trace-preserving CP maps.
  static DensityMatrix unchecked(CMatrix m);

  /// rho = (I + xX + yY + zZ) / 2.
  static DensityMatrix from_bloch(double x, double y, double z);

  static DensityMatrix maximally_mixed(Eigen::Index dim);

 private:
  DensityMatrix(CMatrix m, NoCheck) : HermitianMatrix(std::move(m), NoCheck{}) {}
};

/// Ordered Kraus operators of a channel from C^dim_in to C^dim_out.
/// Completeness sum K^dagger K = I is enforced at construction.
class KrausSet {
 public:
  KrausSet(Eigen::Index dim_in, Eigen::Index dim_out, std::vector<CMatrix> ops);

  Eigen::Index dim_in() const { return dim_in_; }
  Eigen::Index dim_out() const { return dim_out_; }
  const std::vector<CMatrix>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

 private:
  Eigen::Index dim_in_;
  Eigen::Index dim_out_;
  std::vector<CMatrix> ops_;
};

namespace pauli {
CMatrix identity();
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

/// Eigenvalues of a Hermitian matrix, descending, by cyclic Jacobi sweeps.
std::vector<double> eigenvalues_hermitian(const HermitianMatrix& m);

/// In-place cyclic Jacobi on a row-major n x n Hermitian buffer. The
/// buffer is destroyed; the eigenvalues (unsorted) are written to `out`.
/// No Hermiticity check is performed.
void jacobi_eigenvalues(std::span<Complex> a, std::size_t n,
                        std::span<double> out);

/// Real symmetric counterpart of jacobi_eigenvalues, for hot loops whose
/// matrices can be phased real. Same contract.
void jacobi_eigenvalues_symmetric(std::span<double> a, std::size_t n,
                                  std::span<double> out);

/// Shannon entropy in bits of a spectrum. Values in [-kPositivityTol, 0) are
/// clamped to zero; anything more negative throws NotAStateError.
double entropy_of_spectrum(std::span<const double> eigenvalues);

double von_neumann_entropy(const DensityMatrix& rho);

double binary_entropy(double x);

DensityMatrix apply_kraus(const KrausSet& k, const DensityMatrix& rho);

/// Applies the map to an arbitrary (not necessarily unit-trace) operator.
CMatrix apply_kraus_map(const KrausSet& k, const CMatrix& m);

/// Complementary channel with (R_i)_{alpha,j} = (K_alpha)_{i,j}; its output
/// dimension is the number of Kraus operators.
KrausSet complement_kraus(const KrausSet& k);

/// J = sum_ij |i><j| (x) Lambda(|i><j|), the unnormalized maximally
/// entangled state with the channel applied to one half. The reference index
/// is the first tensor factor: row/column i * dim_out + a. Requires qubit
/// input; trace equals 2.
HermitianMatrix choi_matrix(const KrausSet& k);

/// Transpose on the second tensor factor of a 2x2 (x) 2x2 operator.
HermitianMatrix partial_transpose(const HermitianMatrix& m);

double frobenius_distance(const CMatrix& a, const CMatrix& b);

}  // namespace covpauli
