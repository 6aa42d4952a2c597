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

#include <string_view>
#include <vector>

#include "qcorr/pauli.hpp"
#include "qcorr/spectrum.hpp"
#include "qcorr/state.hpp"

namespace qcorr {

/// Enumerating a group with more generators than this is refused.
inline constexpr int kDefaultEnumerationLimit = 20;

/// m independent pairwise-commuting Hermitian Pauli strings. Construction
/// validates commutation (reporting the offending pair), GF(2) independence
/// of the symplectic rows (reporting the first dependent generator), and
/// that every generator carries a real sign. Independence guarantees that
/// no product of generators collapses to -identity.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(std::vector<PauliString> generators);

  int n_qubits() const { return n_qubits_; }
  int size() const { return static_cast<int>(generators_.size()); }
  const std::vector<PauliString>& generators() const { return generators_; }

 private:
  int n_qubits_;
  std::vector<PauliString> generators_;
};

/// Parses a comma-separated generator list such as "+ZZI,+IZZ" (sign
/// optional, defaulting to "+") and validates it as a group.
StabilizerGroup parse_stabilizer_group(std::string_view text);

/// All 2^m group elements, identity first, in generator-mask order.
std::vector<PauliString> enumerate_elements(
    const StabilizerGroup& g, int max_generators = kDefaultEnumerationLimit);

/// ranks[k-1] = r_k, the GF(2) rank of the symplectic rows of all group
/// elements with support <= k. Nondecreasing with r_n = m.
struct RankProfile {
  std::vector<int> ranks;
  int m = 0;
};

RankProfile rank_profile(const StabilizerGroup& g,
                         int max_generators = kDefaultEnumerationLimit);

/// A group element chosen as a basis vector while sweeping supports in
/// ascending order; weight_class = support of the element at selection.
struct NestedGenerator {
  PauliString element;
  int weight_class;
};

/// Greedy weight-sorted GF(2) basis of the group: the first r_k entries
/// have weight_class <= k, so prefixes realize the nested generator sets.
std::vector<NestedGenerator> nested_generators(
    const StabilizerGroup& g, int max_generators = kDefaultEnumerationLimit);

/// Exact correlation spectrum of the stabilizer state: C^(k) = r_k - r_{k-1}
/// and entropy ladder n - r_k, all integers.
CorrelationSpectrum stabilizer_spectrum(
    const StabilizerGroup& g, int max_generators = kDefaultEnumerationLimit);

/// The uniform group average (1/2^n) sum over all elements, rendered dense.
/// Rank 2^(n-m), entropy n - m bits.
DensityMatrix to_density_matrix(const StabilizerGroup& g,
                                int dense_limit = kDefaultDenseLimit);

/// exp(eta + lambda * sum of nested generators with weight_class <= order),
/// normalized; expands to
///   (1/2^n) (1 + sum_d tanh^d(lambda) [products of d selected generators]).
/// As lambda -> +inf the entropy tends to n - r_order bits.
DensityMatrix lambda_family(const StabilizerGroup& g, int order, double lambda,
                            int dense_limit = kDefaultDenseLimit);

}  // namespace qcorr
