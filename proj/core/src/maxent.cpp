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

#include "qcorr/maxent.hpp"

#include <bit>
#include <cmath>
#include <cstddef>
#include <string>

namespace qcorr {

namespace {

void check_guard(const Eigen::VectorXd& theta) {
  const double mag = theta.size() > 0 ? theta.cwiseAbs().maxCoeff() : 0.0;
  if (mag > kDualCoefficientGuard) {
    throw DivergenceError(
        "dual coefficient magnitude " + std::to_string(mag) +
        " exceeded the guard of 1e3; the constraint source is rank-deficient "
        "(regularize with depolarize and use the continuity pipeline)");
  }
}

void check_alignment(const DualParameters& theta, const ConstraintSet& c) {
  if (theta.coefficients.size() !=
      static_cast<Eigen::Index>(c.basis.size())) {
    throw ValidationError("dual parameter count " +
                          std::to_string(theta.coefficients.size()) +
                          " does not match constraint basis size " +
                          std::to_string(c.basis.size()));
  }
  if (!theta.coefficients.allFinite()) {
    throw ValidationError("dual parameters must be finite");
  }
}

Matrix assemble_hamiltonian(const Eigen::VectorXd& theta,
                            const ConstraintSet& c) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << c.n_qubits);
  Matrix h = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    const double coeff = theta(static_cast<Eigen::Index>(i));
    if (coeff != 0.0) {
      c.basis[i].add_to(h, Complex{coeff, 0.0});
    }
  }
  return h;
}

double log_sum_exp(const Eigen::VectorXd& values) {
  const double top = values.maxCoeff();
  return top + std::log((values.array() - top).exp().sum());
}

}  // namespace

std::vector<PauliString> pauli_basis(int n_qubits, int max_weight) {
  if (n_qubits < 1 || n_qubits > 20) {
    throw ValidationError("Pauli basis enumeration supports 1 to 20 qubits");
  }
  if (max_weight < 1 || max_weight > n_qubits) {
    throw ValidationError("basis weight must lie in [1, " +
                          std::to_string(n_qubits) + "]");
  }
  std::vector<PauliString> basis;
  const std::uint64_t masks = std::uint64_t{1} << n_qubits;
  for (int w = 1; w <= max_weight; ++w) {
    for (std::uint64_t support = 1; support < masks; ++support) {
      if (std::popcount(support) != w) continue;
      // Positions of set bits, highest (particle 1 side) first.
      std::vector<int> shifts;
      shifts.reserve(static_cast<std::size_t>(w));
      for (int s = n_qubits - 1; s >= 0; --s) {
        if ((support >> s) & 1u) shifts.push_back(s);
      }
      std::uint64_t assignments = 1;
      for (int i = 0; i < w; ++i) assignments *= 3;
      for (std::uint64_t a = 0; a < assignments; ++a) {
        std::uint64_t x = 0, z = 0;
        std::uint64_t rest = a;
        for (int shift : shifts) {
          const std::uint64_t letter = rest % 3;  // 0 -> X, 1 -> Y, 2 -> Z
          rest /= 3;
          if (letter != 2) x |= std::uint64_t{1} << shift;
          if (letter != 0) z |= std::uint64_t{1} << shift;
        }
        basis.emplace_back(n_qubits, x, z, 0);
      }
    }
  }
  return basis;
}

ConstraintSet extract_constraints(const DensityMatrix& rho, int order) {
  if (order < 1 || order > rho.n_qubits()) {
    throw ValidationError("constraint order must lie in [1, " +
                          std::to_string(rho.n_qubits()) + "], got " +
                          std::to_string(order));
  }
  ConstraintSet c;
  c.n_qubits = rho.n_qubits();
  c.order = order;
  c.basis = pauli_basis(rho.n_qubits(), order);
  c.targets.resize(static_cast<Eigen::Index>(c.basis.size()));
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    c.targets(static_cast<Eigen::Index>(i)) =
        pauli_expectation(rho, c.basis[i]);
  }
  return c;
}

double dual_value(const DualParameters& theta, const ConstraintSet& c) {
  check_alignment(theta, c);
  check_guard(theta.coefficients);
  const Matrix h = assemble_hamiltonian(theta.coefficients, c);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return log_sum_exp(solver.eigenvalues()) -
         theta.coefficients.dot(c.targets);
}

DualEval dual_value_and_gradient(const DualParameters& theta,
                                 const ConstraintSet& c) {
  check_alignment(theta, c);
  check_guard(theta.coefficients);
  const Matrix h = assemble_hamiltonian(theta.coefficients, c);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const double lse = log_sum_exp(solver.eigenvalues());
  const Eigen::VectorXd weights =
      (solver.eigenvalues().array() - lse).exp();
  const Matrix sigma = solver.eigenvectors() * weights.asDiagonal() *
                       solver.eigenvectors().adjoint();

  DualEval eval;
  eval.value = lse - theta.coefficients.dot(c.targets);
  eval.gradient.resize(static_cast<Eigen::Index>(c.basis.size()));
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    eval.gradient(static_cast<Eigen::Index>(i)) =
        pauli_trace_product(sigma, c.basis[i]).real() -
        c.targets(static_cast<Eigen::Index>(i));
  }
  return eval;
}

namespace {

// Normalized exponential state for the current coefficients.
Matrix exponential_state(const Eigen::VectorXd& theta,
                         const ConstraintSet& c) {
  const Matrix h = assemble_hamiltonian(theta, c);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const double lse = log_sum_exp(solver.eigenvalues());
  const Eigen::VectorXd weights =
      (solver.eigenvalues().array() - lse).exp();
  Matrix sigma = solver.eigenvectors() * weights.asDiagonal() *
                 solver.eigenvectors().adjoint();
  return (sigma + sigma.adjoint()) / 2.0;
}

}  // namespace

MaxEntResult fit(const ConstraintSet& c, double tol, int max_iter) {
  if (!(tol > 0.0)) {
    throw ValidationError("fit tolerance must be positive");
  }
  if (max_iter < 1) {
    throw ValidationError("fit iteration budget must be positive");
  }
  DualParameters theta;
  theta.coefficients =
      Eigen::VectorXd::Zero(static_cast<Eigen::Index>(c.basis.size()));

  DualEval eval = dual_value_and_gradient(theta, c);
  int iterations = 0;
  bool converged = eval.gradient.size() == 0 ||
                   eval.gradient.cwiseAbs().maxCoeff() <= tol;

  constexpr double kArmijoSlope = 1e-4;
  constexpr double kStepFloor = 1e-15;

  while (!converged && iterations < max_iter) {
    const Eigen::VectorXd direction = -eval.gradient;
    const double slope = -eval.gradient.squaredNorm();
    double step = 1.0;
    DualParameters trial;
    bool advanced = false;
    while (step >= kStepFloor) {
      trial.coefficients = theta.coefficients + step * direction;
      const double trial_value = dual_value(trial, c);
      if (trial_value <= eval.value + kArmijoSlope * step * slope) {
        advanced = true;
        break;
      }
      step *= 0.5;
    }
    if (!advanced) {
      break;  // Line search stalled at numerical precision.
    }
    theta = std::move(trial);
    eval = dual_value_and_gradient(theta, c);
    ++iterations;
    converged = eval.gradient.cwiseAbs().maxCoeff() <= tol;
  }

  Matrix sigma = exponential_state(theta.coefficients, c);
  DensityMatrix state(c.n_qubits, std::move(sigma));
  const double residual =
      eval.gradient.size() > 0 ? eval.gradient.cwiseAbs().maxCoeff() : 0.0;
  const double entropy = von_neumann_entropy(state);
  return MaxEntResult{std::move(state), std::move(theta), entropy,
                      residual,         iterations,       converged};
}

MaxEntResult product_state_closure(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  std::vector<DensityMatrix> marginals;
  marginals.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    marginals.push_back(partial_trace(rho, SubsetIndex({i}, n)));
  }

  DensityMatrix product = marginals[0];
  for (int i = 1; i < n; ++i) {
    product = tensor(product, marginals[static_cast<std::size_t>(i)], n);
  }

  // Recover the dual coefficients from the marginal logarithms when they
  // exist; a singular marginal has no finite exponential representation.
  const std::vector<PauliString> basis = pauli_basis(n, 1);
  DualParameters dual;
  bool all_full_rank = true;
  for (const auto& marginal : marginals) {
    if (marginal.smallest_eigenvalue() <= 0.0) {
      all_full_rank = false;
      break;
    }
  }
  if (all_full_rank) {
    dual.coefficients.resize(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& p = basis[i];
      const int particle =
          n - (63 - std::countl_zero(p.x_bits() | p.z_bits()));
      const auto& marginal = marginals[static_cast<std::size_t>(particle) - 1];
      Eigen::SelfAdjointEigenSolver<Matrix> solver(marginal.entries());
      const Matrix log_marginal =
          solver.eigenvectors() *
          solver.eigenvalues().array().log().matrix().asDiagonal() *
          solver.eigenvectors().adjoint();
      // Single-qubit letter of p, re-read at qubit position 0.
      const std::uint64_t bit = p.x_bits() | p.z_bits();
      const int shift = 63 - std::countl_zero(bit);
      const PauliString local(1, (p.x_bits() >> shift) & 1u,
                              (p.z_bits() >> shift) & 1u, 0);
      dual.coefficients(static_cast<Eigen::Index>(i)) =
          pauli_trace_product(log_marginal, local).real() / 2.0;
    }
  }

  double residual = 0.0;
  for (const auto& p : basis) {
    residual = std::max(residual, std::abs(pauli_expectation(product, p) -
                                           pauli_expectation(rho, p)));
  }

  const double entropy = von_neumann_entropy(product);
  return MaxEntResult{std::move(product), std::move(dual), entropy,
                      residual,           0,               true};
}

}  // namespace qcorr
