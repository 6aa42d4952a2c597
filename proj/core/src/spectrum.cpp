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

#include "qcorr/spectrum.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace qcorr {

std::string_view to_string(SpectrumMethod method) {
  switch (method) {
    case SpectrumMethod::kNumeric:
      return "numeric";
    case SpectrumMethod::kNumericExtrapolated:
      return "numeric-extrapolated";
    case SpectrumMethod::kStabilizerExact:
      return "stabilizer-exact";
    case SpectrumMethod::kGhzAnalytic:
      return "ghz-analytic";
  }
  return "unknown";
}

SpectrumMethod spectrum_method_from_string(std::string_view name) {
  if (name == "numeric") return SpectrumMethod::kNumeric;
  if (name == "numeric-extrapolated") return SpectrumMethod::kNumericExtrapolated;
  if (name == "stabilizer-exact") return SpectrumMethod::kStabilizerExact;
  if (name == "ghz-analytic") return SpectrumMethod::kGhzAnalytic;
  throw ValidationError("unknown spectrum method '" + std::string(name) + "'");
}

CorrelationSpectrum CorrelationSpectrum::from_ladder(
    int n_qubits, SpectrumMethod method, std::vector<double> ladder) {
  if (static_cast<int>(ladder.size()) != n_qubits) {
    throw ValidationError("entropy ladder must have one entry per order");
  }
  CorrelationSpectrum out;
  out.n_qubits = n_qubits;
  out.method = method;
  out.entropy_ladder = std::move(ladder);
  for (int k = 2; k <= n_qubits; ++k) {
    out.c_of_k[k] = out.entropy_ladder[static_cast<std::size_t>(k) - 2] -
                    out.entropy_ladder[static_cast<std::size_t>(k) - 1];
  }
  out.c_total = out.entropy_ladder.front() - out.entropy_ladder.back();
  return out;
}

double CorrelationSpectrum::max_deviation(
    const CorrelationSpectrum& other) const {
  if (n_qubits != other.n_qubits ||
      entropy_ladder.size() != other.entropy_ladder.size()) {
    throw ValidationError("cannot compare spectra of different shapes");
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < entropy_ladder.size(); ++i) {
    dev = std::max(dev, std::abs(entropy_ladder[i] - other.entropy_ladder[i]));
  }
  for (const auto& [k, c] : c_of_k) {
    const auto it = other.c_of_k.find(k);
    if (it == other.c_of_k.end()) {
      throw ValidationError("spectra report different correlation orders");
    }
    dev = std::max(dev, std::abs(c - it->second));
  }
  dev = std::max(dev, std::abs(c_total - other.c_total));
  return dev;
}

}  // namespace qcorr
