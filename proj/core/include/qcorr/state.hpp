// Copyright 2026 The qcorr Authors
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
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qcorr/errors.hpp"

namespace qcorr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Dense operations refuse to allocate beyond this many qubits unless the
/// caller raises the limit explicitly.
inline constexpr int kDefaultDenseLimit = 12;

/// Tolerance for Hermiticity and unit-trace checks.
inline constexpr double kStateTol = 1e-10;

/// Eigenvalues in [-kEigenvalueClamp, 0) are treated as numerical noise and
/// clamped to zero; anything below the window is a genuinely invalid state.
inline constexpr double kEigenvalueClamp = 1e-10;

/// Strictly increasing particle labels drawn from {1, ..., n_qubits}.
/// Particle 1 is the most significant (leftmost) tensor factor.
class SubsetIndex {
 public:
  SubsetIndex(std::vector<int> members, int n_qubits);

  const std::vector<int>& members() const { return members_; }
  int n_qubits() const { return n_qubits_; }
  int size() const { return static_cast<int>(members_.size()); }

 private:
  std::vector<int> members_;
  int n_qubits_;
};

/// Dense Hermitian unit-trace operator on an n-qubit Hilbert space.
/// Construction validates Hermiticity, unit trace, and positive
/// semidefiniteness (eigenvalues in [-1e-10, 0) clamp to zero on read).
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, Matrix entries);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  const Matrix& entries() const { return entries_; }

  /// Eigenvalues in ascending order with the noise window clamped to zero.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  double smallest_eigenvalue() const { return eigenvalues_(0); }

 private:
  int n_qubits_;
  Matrix entries_;
  Eigen::VectorXd eigenvalues_;
};

/// Pure n-qubit state; amplitudes validated to unit norm.
class StateVector {
 public:
  StateVector(int n_qubits, CVector amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t{1} << n_qubits_; }
  const CVector& amplitudes() const { return amplitudes_; }

 private:
  int n_qubits_;
  CVector amplitudes_;
};

/// |psi><psi| as a density matrix.
DensityMatrix projector(const StateVector& psi);

/// Kronecker product; particle labels of `b` follow those of `a`.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b,
                     int dense_limit = kDefaultDenseLimit);

/// Reduced density matrix over the kept particles, tracing out the rest.
/// Kept particles preserve their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const SubsetIndex& keep);

/// Von Neumann entropy in bits: -sum p log2 p with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy in bits of a raw probability vector (used for spectra assembled
/// from eigenvalues that are already at hand).
double entropy_bits(const Eigen::VectorXd& probabilities);

/// exp(h) for Hermitian h, via eigendecomposition. Input Hermiticity is
/// checked to 1e-10; the result is re-symmetrized to kill rounding residue.
Matrix hermitian_exp(const Matrix& h);

/// (1 - eps) rho + eps I / 2^n. Full rank for eps > 0.
DensityMatrix depolarize(const DensityMatrix& rho, double eps);

/// Half the trace norm of a - b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qcorr
