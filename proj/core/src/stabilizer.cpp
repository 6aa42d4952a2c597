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

#include "qcorr/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

namespace qcorr {

namespace {

// Incremental GF(2) row reduction over symplectic vectors (x_bits, z_bits),
// treated as one 2n-bit row with the x part in the high half. Rows are kept
// sorted by leading bit, descending, so a single forward pass reduces a
// candidate completely.
class SymplecticBasis {
 public:
  // Returns true (and absorbs the row) iff it is independent of the basis.
  bool insert(std::uint64_t x, std::uint64_t z) {
    std::uint64_t rx = x, rz = z;
    for (const auto& [bx, bz] : rows_) {
      if (high_bit(rx, rz) == high_bit(bx, bz)) {
        rx ^= bx;
        rz ^= bz;
      }
    }
    if (rx == 0 && rz == 0) {
      return false;
    }
    rows_.emplace_back(rx, rz);
    std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
      return high_bit(a.first, a.second) > high_bit(b.first, b.second);
    });
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  // Position of the highest set bit in the concatenation (x, z).
  static int high_bit(std::uint64_t x, std::uint64_t z) {
    if (x != 0) return 64 + (63 - std::countl_zero(x));
    if (z != 0) return 63 - std::countl_zero(z);
    return -1;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows_;
};

void check_enumeration_guard(const StabilizerGroup& g, int max_generators) {
  if (g.size() > max_generators) {
    throw SizeLimitError("group has " + std::to_string(g.size()) +
                         " generators, above the enumeration limit of " +
                         std::to_string(max_generators));
  }
}

void check_dense_guard(const StabilizerGroup& g, int dense_limit) {
  if (g.n_qubits() > dense_limit) {
    throw SizeLimitError("dense synthesis of a " +
                         std::to_string(g.n_qubits()) +
                         "-qubit state exceeds the dense limit of " +
                         std::to_string(dense_limit));
  }
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::vector<PauliString> generators)
    : n_qubits_(0), generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw ValidationError("a stabilizer group needs at least one generator");
  }
  n_qubits_ = generators_[0].n_qubits();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& gen = generators_[i];
    if (gen.n_qubits() != n_qubits_) {
      throw ValidationError("generator " + std::to_string(i + 1) + " acts on " +
                            std::to_string(gen.n_qubits()) +
                            " qubits, expected " + std::to_string(n_qubits_));
    }
    if (!gen.is_hermitian()) {
      throw ValidationError("generator " + std::to_string(i + 1) + " (" +
                            gen.str() + ") has an odd phase exponent");
    }
    if (gen.is_identity()) {
      throw ValidationError("generator " + std::to_string(i + 1) +
                            " is the identity and cannot generate");
    }
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!generators_[i].commutes_with(generators_[j])) {
        throw ValidationError("generators " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " anticommute");
      }
    }
  }
  SymplecticBasis basis;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!basis.insert(generators_[i].x_bits(), generators_[i].z_bits())) {
      throw ValidationError("dependence at index " + std::to_string(i + 1) +
                            ": generator " + generators_[i].str() +
                            " is a product of earlier generators");
    }
  }
}

StabilizerGroup parse_stabilizer_group(std::string_view text) {
  std::vector<PauliString> gens;
  std::size_t pos = 0;
  int index = 1;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      throw ValidationError("generator " + std::to_string(index) +
                            " is empty");
    }
    try {
      gens.push_back(PauliString::parse(token));
    } catch (const ValidationError& err) {
      throw ValidationError("generator " + std::to_string(index) + ": " +
                            err.what());
    }
    pos = comma + 1;
    ++index;
    if (comma == text.size()) break;
  }
  return StabilizerGroup(std::move(gens));
}

std::vector<PauliString> enumerate_elements(const StabilizerGroup& g,
                                            int max_generators) {
  check_enumeration_guard(g, max_generators);
  const std::size_t count = std::size_t{1} << g.size();
  std::vector<PauliString> elements;
  elements.reserve(count);
  elements.push_back(PauliString::identity(g.n_qubits()));
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int lowest = std::countr_zero(mask);
    const std::size_t rest = mask & (mask - 1);
    elements.push_back(pauli_multiply(
        elements[rest], g.generators()[static_cast<std::size_t>(lowest)]));
  }
  return elements;
}

namespace {

// Elements bucketed by support, ascending; bucket order is enumeration order.
std::vector<std::vector<PauliString>> elements_by_support(
    const StabilizerGroup& g, int max_generators) {
  std::vector<std::vector<PauliString>> buckets(
      static_cast<std::size_t>(g.n_qubits()) + 1);
  for (auto& element : enumerate_elements(g, max_generators)) {
    buckets[static_cast<std::size_t>(element.support())].push_back(
        std::move(element));
  }
  return buckets;
}

}  // namespace

RankProfile rank_profile(const StabilizerGroup& g, int max_generators) {
  const auto buckets = elements_by_support(g, max_generators);
  RankProfile profile;
  profile.m = g.size();
  profile.ranks.reserve(static_cast<std::size_t>(g.n_qubits()));
  SymplecticBasis basis;
  for (int k = 1; k <= g.n_qubits(); ++k) {
    for (const auto& element : buckets[static_cast<std::size_t>(k)]) {
      basis.insert(element.x_bits(), element.z_bits());
    }
    profile.ranks.push_back(basis.rank());
  }
  return profile;
}

std::vector<NestedGenerator> nested_generators(const StabilizerGroup& g,
                                               int max_generators) {
  const auto buckets = elements_by_support(g, max_generators);
  std::vector<NestedGenerator> nested;
  nested.reserve(static_cast<std::size_t>(g.size()));
  SymplecticBasis basis;
  for (int k = 1; k <= g.n_qubits(); ++k) {
    for (const auto& element : buckets[static_cast<std::size_t>(k)]) {
      if (basis.insert(element.x_bits(), element.z_bits())) {
        nested.push_back({element, k});
      }
    }
  }
  return nested;
}

CorrelationSpectrum stabilizer_spectrum(const StabilizerGroup& g,
                                        int max_generators) {
  const RankProfile profile = rank_profile(g, max_generators);
  std::vector<double> ladder;
  ladder.reserve(profile.ranks.size());
  for (int r : profile.ranks) {
    ladder.push_back(static_cast<double>(g.n_qubits() - r));
  }
  return CorrelationSpectrum::from_ladder(
      g.n_qubits(), SpectrumMethod::kStabilizerExact, std::move(ladder));
}

DensityMatrix to_density_matrix(const StabilizerGroup& g, int dense_limit) {
  check_dense_guard(g, dense_limit);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << g.n_qubits());
  Matrix acc = Matrix::Zero(d, d);
  const double weight = 1.0 / static_cast<double>(d);
  for (const auto& element : enumerate_elements(g)) {
    element.add_to(acc, Complex{weight, 0.0});
  }
  return DensityMatrix(g.n_qubits(), std::move(acc));
}

DensityMatrix lambda_family(const StabilizerGroup& g, int order, double lambda,
                            int dense_limit) {
  check_dense_guard(g, dense_limit);
  if (order < 1 || order > g.n_qubits()) {
    throw ValidationError("family order must lie in [1, " +
                          std::to_string(g.n_qubits()) + "], got " +
                          std::to_string(order));
  }
  std::vector<PauliString> selected;
  for (const auto& [element, weight_class] : nested_generators(g)) {
    if (weight_class <= order) {
      selected.push_back(element);
    }
  }

  const auto d = static_cast<Eigen::Index>(std::size_t{1} << g.n_qubits());
  const double norm = 1.0 / static_cast<double>(d);
  const double t = std::tanh(lambda);
  Matrix acc = norm * Matrix::Identity(d, d).eval();
  // Subset products via the split-off-lowest-bit recurrence; coefficient is
  // tanh^d(lambda) for a product of d distinct selected generators.
  const std::size_t subsets = std::size_t{1} << selected.size();
  std::vector<PauliString> products;
  products.reserve(subsets);
  products.push_back(PauliString::identity(g.n_qubits()));
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const int lowest = std::countr_zero(mask);
    const std::size_t rest = mask & (mask - 1);
    products.push_back(pauli_multiply(
        products[rest], selected[static_cast<std::size_t>(lowest)]));
    const double coeff =
        norm * std::pow(t, static_cast<double>(std::popcount(mask)));
    products.back().add_to(acc, Complex{coeff, 0.0});
  }
  return DensityMatrix(g.n_qubits(), std::move(acc));
}

}  // namespace qcorr
