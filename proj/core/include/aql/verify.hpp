// Copyright 2026 The AQL Authors
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
#include <vector>

namespace aql {

struct VerifyCheck {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;

  bool passed() const noexcept { return max_residual <= tolerance; }
};

struct VerifyReport {
  int dimension = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<VerifyCheck> checks;

  bool passed() const noexcept;
};

/// Runs the algebraic invariant suite for SU(dim) on `trials` seeded random
/// (n, m, θ) triples: basis orthonormality, structure-constant antisymmetry,
/// commutator reconstruction, skew generators, orthogonal rotations,
/// composition, spectrum preservation, rotation/conjugation equivalence and,
/// for dim = 2, closed-form vs matrix-exponential agreement.
/// Throws kInvalidDimension unless dim ∈ {2, 3, 4}; kInvalidInput if trials < 1.
VerifyReport run_verification(int dim, int trials, std::uint64_t seed);

}  // namespace aql
