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

#include <stdexcept>
#include <string>

namespace qcorr {

/// Rejected input: a malformed state, an invalid generator list, or an
/// argument outside its documented range.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dense operation would exceed the configured qubit limit.
class SizeLimitError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The state failed the full-rank gate of the direct numeric pipeline.
class RankDeficientError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Dual coefficients left the trust region during a maximum-entropy fit.
/// This is the expected failure mode for rank-deficient constraint sources;
/// callers should regularize (depolarize) and retry via the continuity path.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcorr
