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

#include <cstdint>
#include <string>
#include <string_view>

#include "qcorr/state.hpp"

namespace qcorr {

/// Signed n-qubit Pauli operator P = i^t * O_1 x ... x O_n with letters
/// O_j in {I, X, Y, Z} and phase exponent t taken modulo 4.
///
/// Letters are packed into two bit masks: qubit j carries X iff x_bits[j],
/// Z iff z_bits[j], and Y iff both. Particle 1 owns the most significant
/// bit (shift n-1), matching the tensor-factor order of DensityMatrix.
/// Products of Hermitian strings transiently pick up +/-i factors, so the
/// phase exponent may be odd mid-computation; validated stabilizer elements
/// always end up with an even exponent (overall sign +/-1).
class PauliString {
 public:
  PauliString(int n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
              int phase_exponent = 0);

  static PauliString identity(int n_qubits);

  /// Parses "[+|-]" followed by n letters from {I, X, Y, Z}; the sign is
  /// optional and defaults to "+". The first letter is particle 1.
  static PauliString parse(std::string_view text);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_bits_; }
  std::uint64_t z_bits() const { return z_bits_; }
  int phase_exponent() const { return phase_; }

  /// Number of non-identity tensor factors.
  int support() const;
  /// N_I = n - support.
  int identity_count() const { return n_qubits_ - support(); }
  bool is_identity() const { return x_bits_ == 0 && z_bits_ == 0; }

  /// True iff the overall phase is +/-1 (even exponent), i.e. the operator
  /// is Hermitian.
  bool is_hermitian() const { return phase_ % 2 == 0; }
  /// +1 or -1 for Hermitian strings; throws otherwise.
  int sign() const;

  bool commutes_with(const PauliString& other) const;

  /// "+XYZ" / "-ZZI" style; non-Hermitian phases render as "+i" / "-i".
  std::string str() const;

  /// Dense 2^n x 2^n matrix.
  Matrix to_matrix() const;
  /// Accumulates coeff * P into `m` (one nonzero per column, O(2^n)).
  void add_to(Matrix& m, Complex coeff) const;

  bool operator==(const PauliString& other) const = default;

 private:
  int n_qubits_;
  std::uint64_t x_bits_;
  std::uint64_t z_bits_;
  int phase_;
};

/// Group product with the standard sign bookkeeping; associative.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);

/// Tr(m * P) without forming P densely.
Complex pauli_trace_product(const Matrix& m, const PauliString& p);

/// Tr(rho * P), real for Hermitian P. The imaginary residue is checked
/// against 1e-8 before being discarded.
double pauli_expectation(const DensityMatrix& rho, const PauliString& p);

}  // namespace qcorr
