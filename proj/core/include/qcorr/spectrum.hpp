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

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {

enum class SpectrumMethod {
  kNumeric,
  kNumericExtrapolated,
  kStabilizerExact,
  kGhzAnalytic,
};

std::string_view to_string(SpectrumMethod method);
SpectrumMethod spectrum_method_from_string(std::string_view name);

/// Irreducible k-particle correlation spectrum of an n-qubit state.
///
/// entropy_ladder[l-1] holds the entropy in bits of the maximum-entropy
/// state consistent with all l-particle marginals; c_of_k maps each order
/// k >= 2 to the ladder difference C^(k), and c_total is their sum (equal
/// to the first-minus-last ladder entry by telescoping).
struct CorrelationSpectrum {
  int n_qubits = 0;
  SpectrumMethod method = SpectrumMethod::kNumeric;
  std::vector<double> entropy_ladder;
  std::map<int, double> c_of_k;
  double c_total = 0.0;
  std::optional<double> uncertainty;
  bool converged = true;

  /// Assembles the spectrum from an entropy ladder; c_of_k and c_total are
  /// derived so the defining identities hold exactly.
  static CorrelationSpectrum from_ladder(int n_qubits, SpectrumMethod method,
                                         std::vector<double> ladder);

  /// Largest entrywise deviation from `other` over the ladder and the
  /// per-order correlations (orders must agree).
  double max_deviation(const CorrelationSpectrum& other) const;

  bool operator==(const CorrelationSpectrum& other) const = default;
};

}  // namespace qcorr
