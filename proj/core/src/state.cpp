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

#include "qcorr/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcorr {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 62) {
    throw ValidationError("qubit count must be in [1, 62], got " +
                          std::to_string(n_qubits));
  }
}

double max_hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

SubsetIndex::SubsetIndex(std::vector<int> members, int n_qubits)
    : members_(std::move(members)), n_qubits_(n_qubits) {
  check_qubit_count(n_qubits_);
  if (members_.empty()) {
    throw ValidationError("particle subset must be nonempty");
  }
  int prev = 0;
  for (int label : members_) {
    if (label < 1 || label > n_qubits_) {
      throw ValidationError("particle label " + std::to_string(label) +
                            " outside [1, " + std::to_string(n_qubits_) + "]");
    }
    if (label <= prev) {
      throw ValidationError("particle labels must be strictly increasing");
    }
    prev = label;
  }
}

DensityMatrix::DensityMatrix(int n_qubits, Matrix entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
  check_qubit_count(n_qubits_);
  const auto d = static_cast<Eigen::Index>(dim());
  if (entries_.rows() != d || entries_.cols() != d) {
    throw ValidationError("density matrix for " + std::to_string(n_qubits_) +
                          " qubits must be " + std::to_string(d) + "x" +
                          std::to_string(d) + ", got " +
                          std::to_string(entries_.rows()) + "x" +
                          std::to_string(entries_.cols()));
  }
  const double herm = max_hermiticity_defect(entries_);
  if (herm > kStateTol) {
    throw ValidationError("density matrix is not Hermitian (defect " +
                          std::to_string(herm) + ")");
  }
  const double trace_defect = std::abs(entries_.trace() - Complex{1.0, 0.0});
  if (trace_defect > kStateTol) {
    throw ValidationError("density matrix trace differs from 1 by " +
                          std::to_string(trace_defect));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_,
                                               Eigen::EigenvaluesOnly);
  eigenvalues_ = solver.eigenvalues();
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    if (eigenvalues_(i) < -kEigenvalueClamp) {
      throw ValidationError("density matrix has eigenvalue " +
                            std::to_string(eigenvalues_(i)) +
                            " below the -1e-10 noise window");
    }
    if (eigenvalues_(i) < 0.0) {
      eigenvalues_(i) = 0.0;
    }
  }
}

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits_);
  const auto d = static_cast<Eigen::Index>(dim());
  if (amplitudes_.size() != d) {
    throw ValidationError("state vector for " + std::to_string(n_qubits_) +
                          " qubits must have " + std::to_string(d) +
                          " amplitudes, got " +
                          std::to_string(amplitudes_.size()));
  }
  const double norm_defect = std::abs(amplitudes_.norm() - 1.0);
  if (norm_defect > kStateTol) {
    throw ValidationError("state vector norm differs from 1 by " +
                          std::to_string(norm_defect));
  }
}

DensityMatrix projector(const StateVector& psi) {
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(psi.n_qubits(), std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b,
                     int dense_limit) {
  const int n = a.n_qubits() + b.n_qubits();
  if (n > dense_limit) {
    throw SizeLimitError("tensor product would span " + std::to_string(n) +
                         " qubits, above the dense limit of " +
                         std::to_string(dense_limit));
  }
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.entries()(i, j) * b.entries();
    }
  }
  return DensityMatrix(n, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsetIndex& keep) {
  if (keep.n_qubits() != rho.n_qubits()) {
    throw ValidationError("subset is indexed over " +
                          std::to_string(keep.n_qubits()) +
                          " qubits but the state has " +
                          std::to_string(rho.n_qubits()));
  }
  const int n = rho.n_qubits();
  const int k = keep.size();
  const int m = n - k;

  // Bit position of particle j (1-based) inside a basis index: n - j.
  std::vector<int> kept_shift;
  kept_shift.reserve(k);
  std::vector<bool> is_kept(static_cast<std::size_t>(n) + 1, false);
  for (int label : keep.members()) {
    kept_shift.push_back(n - label);
    is_kept[static_cast<std::size_t>(label)] = true;
  }
  std::vector<int> env_shift;
  env_shift.reserve(m);
  for (int label = 1; label <= n; ++label) {
    if (!is_kept[static_cast<std::size_t>(label)]) {
      env_shift.push_back(n - label);
    }
  }

  const std::size_t dk = std::size_t{1} << k;
  const std::size_t dm = std::size_t{1} << m;
  auto scatter = [](std::size_t bits, const std::vector<int>& shifts) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
      // Bit i of `bits` addresses the i-th particle in label order, which is
      // the most significant of the packed bits.
      const std::size_t bit = (bits >> (shifts.size() - 1 - i)) & 1u;
      out |= bit << shifts[i];
    }
    return out;
  };

  std::vector<std::size_t> kept_base(dk), env_base(dm);
  for (std::size_t r = 0; r < dk; ++r) kept_base[r] = scatter(r, kept_shift);
  for (std::size_t e = 0; e < dm; ++e) env_base[e] = scatter(e, env_shift);

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk),
                            static_cast<Eigen::Index>(dk));
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t c = 0; c < dk; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t e = 0; e < dm; ++e) {
        acc += rho.entries()(
            static_cast<Eigen::Index>(kept_base[r] | env_base[e]),
            static_cast<Eigen::Index>(kept_base[c] | env_base[e]));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix(k, std::move(out));
}

double entropy_bits(const Eigen::VectorXd& probabilities) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities(i);
    if (p > 0.0) {
      s -= p * std::log2(p);
    }
  }
  return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_bits(rho.eigenvalues());
}

Matrix hermitian_exp(const Matrix& h) {
  if (h.rows() != h.cols()) {
    throw ValidationError("hermitian_exp requires a square matrix");
  }
  const double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kStateTol) {
    throw ValidationError("hermitian_exp input is not Hermitian (defect " +
                          std::to_string(defect) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  Matrix out = solver.eigenvectors() *
               solver.eigenvalues().array().exp().matrix().asDiagonal() *
               solver.eigenvectors().adjoint();
  return (out + out.adjoint()) / 2.0;
}

DensityMatrix depolarize(const DensityMatrix& rho, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw ValidationError("depolarization strength must lie in [0, 1], got " +
                          std::to_string(eps));
  }
  const auto d = static_cast<Eigen::Index>(rho.dim());
  Matrix out = (1.0 - eps) * rho.entries() +
               (eps / static_cast<double>(d)) * Matrix::Identity(d, d);
  return DensityMatrix(rho.n_qubits(), std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ValidationError("trace distance requires equal qubit counts");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.entries() - b.entries(),
                                               Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace qcorr
