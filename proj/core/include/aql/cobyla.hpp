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

#include <functional>
#include <span>
#include <vector>

namespace aql {

/// Derivative-free minimization of f(x) subject to c_k(x) ≥ 0 by linear
/// approximations on a simplex of n + 1 interpolation points with a trust
/// region radius shrinking from rhobeg to rhoend (Powell's COBYLA).
struct CobylaProblem {
  std::function<double(std::span<const double>)> objective;
  int constraint_count = 0;
  /// Writes c_1(x)..c_m(x) into the output span; unused when constraint_count == 0.
  std::function<void(std::span<const double>, std::span<double>)> constraints;
};

struct CobylaOptions {
  double rhobeg = 0.5;
  double rhoend = 1e-6;
  int max_evaluations = 1000;
};

enum class CobylaStatus {
  kConverged,        // rho reached rhoend
  kMaxEvaluations,   // evaluation budget exhausted
  kRoundingErrors,   // simplex inverse lost accuracy
};

struct CobylaResult {
  std::vector<double> x;
  double f = 0.0;
  double max_violation = 0.0;
  int evaluations = 0;
  CobylaStatus status = CobylaStatus::kConverged;
};

/// Throws Error(kConfiguration) for an empty x0, non-positive radii,
/// rhoend > rhobeg or a budget below 1.
CobylaResult cobyla_minimize(const CobylaProblem& problem, std::vector<double> x0,
                             const CobylaOptions& options);

}  // namespace aql
