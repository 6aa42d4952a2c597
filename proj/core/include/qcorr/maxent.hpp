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

#include <utility>
#include <vector>

#include "qcorr/pauli.hpp"
#include "qcorr/state.hpp"

namespace qcorr {

inline constexpr double kDefaultFitTol = 1e-9;
inline constexpr int kDefaultFitMaxIter = 10000;

/// Dual coefficients above this magnitude abort the fit: the constraint
/// source has (numerically) deficient rank and no finite optimum exists.
inline constexpr double kDualCoefficientGuard = 1e3;

/// Every non-identity Pauli string of support <= max_weight, enumerated in
/// a fixed order: weight-major, then support mask, then letters. The order-l
/// basis is a prefix of every higher-order basis.
std::vector<PauliString> pauli_basis(int n_qubits, int max_weight);

/// Expectation targets for every non-identity Pauli string of support <= l.
/// Matching all of them is equivalent to matching every l-particle reduced
/// density matrix, since those strings span exactly the operators visible
/// in the marginals.
struct ConstraintSet {
  int n_qubits = 0;
  int order = 0;
  std::vector<PauliString> basis;
  Eigen::VectorXd targets;
};

ConstraintSet extract_constraints(const DensityMatrix& rho, int order);

/// Coefficients of exp(sum_P theta_P P) over a ConstraintSet's basis.
struct DualParameters {
  Eigen::VectorXd coefficients;
};

struct DualEval {
  double value;
  Eigen::VectorXd gradient;
};

/// Convex dual of the constrained entropy maximization (natural log):
///   value    = ln Tr exp(sum theta_P P) - sum theta_P t_P
///   gradient = <P> under the normalized exponential state, minus t_P.
/// Throws DivergenceError when any |theta_P| exceeds the guard.
DualEval dual_value_and_gradient(const DualParameters& theta,
                                 const ConstraintSet& constraints);

/// Value-only evaluation (eigenvalues suffice); used by the line search.
double dual_value(const DualParameters& theta,
                  const ConstraintSet& constraints);

struct MaxEntResult {
  DensityMatrix state;
  DualParameters dual;
  double entropy_bits;
  double residual;
  int iterations;
  bool converged;
};

/// Gradient descent with Armijo backtracking from theta = 0. Stops when the
/// gradient max-norm drops to `tol`; returns converged=false (with the best
/// iterate) when the iteration budget runs out first. Rank-deficient
/// constraint sources drive the coefficients into the guard and raise
/// DivergenceError; depolarize the source first to stay clear of it.
MaxEntResult fit(const ConstraintSet& constraints, double tol = kDefaultFitTol,
                 int max_iter = kDefaultFitMaxIter);

/// Order-1 fast path: the maximum-entropy state consistent with all
/// single-particle marginals is their tensor product; no optimization.
/// Dual coefficients are recovered from the marginal logarithms when every
/// marginal is full rank, and left empty otherwise.
MaxEntResult product_state_closure(const DensityMatrix& rho);

}  // namespace qcorr
