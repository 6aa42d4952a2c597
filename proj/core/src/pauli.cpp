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

#include "qcorr/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcorr {

namespace {

constexpr Complex kIPower[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x_bits,
                         std::uint64_t z_bits, int phase_exponent)
    : n_qubits_(n_qubits),
      x_bits_(x_bits),
      z_bits_(z_bits),
      phase_(((phase_exponent % 4) + 4) % 4) {
  if (n_qubits_ < 1 || n_qubits_ > 62) {
    throw ValidationError("Pauli string qubit count must be in [1, 62]");
  }
  const std::uint64_t mask = (std::uint64_t{1} << n_qubits_) - 1;
  if ((x_bits_ & ~mask) != 0 || (z_bits_ & ~mask) != 0) {
    throw ValidationError("Pauli bit mask addresses qubits beyond " +
                          std::to_string(n_qubits_));
  }
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(n_qubits, 0, 0, 0);
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) {
    throw ValidationError("empty Pauli string");
  }
  int phase = 0;
  std::size_t start = 0;
  if (text[0] == '+' || text[0] == '-') {
    phase = text[0] == '-' ? 2 : 0;
    start = 1;
  }
  const std::string_view letters = text.substr(start);
  if (letters.empty()) {
    throw ValidationError("Pauli string has a sign but no letters");
  }
  const int n = static_cast<int>(letters.size());
  if (n > 62) {
    throw ValidationError("Pauli string longer than 62 qubits");
  }
  std::uint64_t x = 0, z = 0;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
    switch (letters[static_cast<std::size_t>(j)]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw ValidationError(
            std::string("column ") + std::to_string(j + 1) +
            ": unexpected character '" + letters[static_cast<std::size_t>(j)] +
            "' (expected I, X, Y, or Z)");
    }
  }
  return PauliString(n, x, z, phase);
}

int PauliString::support() const { return popcount(x_bits_ | z_bits_); }

int PauliString::sign() const {
  if (!is_hermitian()) {
    throw ValidationError("Pauli string " + str() +
                          " has phase +/-i and no real sign");
  }
  return phase_ == 0 ? 1 : -1;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_qubits_ != other.n_qubits_) {
    throw ValidationError("Pauli strings act on different qubit counts");
  }
  const int anti = popcount(x_bits_ & other.z_bits_) +
                   popcount(z_bits_ & other.x_bits_);
  return anti % 2 == 0;
}

std::string PauliString::str() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (int j = 0; j < n_qubits_; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (n_qubits_ - 1 - j);
    const bool x = (x_bits_ & bit) != 0;
    const bool z = (z_bits_ & bit) != 0;
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

Matrix PauliString::to_matrix() const {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits_);
  Matrix m = Matrix::Zero(d, d);
  add_to(m, Complex{1.0, 0.0});
  return m;
}

void PauliString::add_to(Matrix& m, Complex coeff) const {
  const std::size_t d = std::size_t{1} << n_qubits_;
  // In the X^x Z^z normal form the phase picks up one factor of i per Y.
  const Complex lead =
      coeff * kIPower[(phase_ + popcount(x_bits_ & z_bits_)) % 4];
  for (std::size_t col = 0; col < d; ++col) {
    const double sign = (popcount(col & z_bits_) % 2 == 0) ? 1.0 : -1.0;
    m(static_cast<Eigen::Index>(col ^ x_bits_),
      static_cast<Eigen::Index>(col)) += lead * sign;
  }
}

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ValidationError("cannot multiply Pauli strings on " +
                          std::to_string(a.n_qubits()) + " and " +
                          std::to_string(b.n_qubits()) + " qubits");
  }
  const std::uint64_t x = a.x_bits() ^ b.x_bits();
  const std::uint64_t z = a.z_bits() ^ b.z_bits();
  // Track phases through the X^x Z^z normal form: converting each operand in
  // and the product back out costs one i per Y, and commuting Z^za past X^xb
  // costs a sign per overlapping bit.
  const int phase = a.phase_exponent() + b.phase_exponent() +
                    popcount(a.x_bits() & a.z_bits()) +
                    popcount(b.x_bits() & b.z_bits()) - popcount(x & z) +
                    2 * popcount(a.z_bits() & b.x_bits());
  return PauliString(a.n_qubits(), x, z, phase);
}

Complex pauli_trace_product(const Matrix& m, const PauliString& p) {
  const std::size_t d = std::size_t{1} << p.n_qubits();
  if (m.rows() != static_cast<Eigen::Index>(d) ||
      m.cols() != static_cast<Eigen::Index>(d)) {
    throw ValidationError("matrix dimension does not match Pauli string");
  }
  const Complex lead =
      kIPower[(p.phase_exponent() + popcount(p.x_bits() & p.z_bits())) % 4];
  Complex acc{0.0, 0.0};
  for (std::size_t col = 0; col < d; ++col) {
    const double sign = (popcount(col & p.z_bits()) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * m(static_cast<Eigen::Index>(col),
                    static_cast<Eigen::Index>(col ^ p.x_bits()));
  }
  return lead * acc;
}

double pauli_expectation(const DensityMatrix& rho, const PauliString& p) {
  if (rho.n_qubits() != p.n_qubits()) {
    throw ValidationError("state and Pauli string qubit counts differ");
  }
  const Complex value = pauli_trace_product(rho.entries(), p);
  if (std::abs(value.imag()) > 1e-8) {
    throw std::logic_error("expectation of " + p.str() +
                           " has imaginary residue " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace qcorr
