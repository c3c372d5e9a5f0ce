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

#include <vector>

#include "aql/ham_space.hpp"
#include "aql/types.hpp"

namespace aql {

/// Time discretization for a finite-duration run. Each rotation arc of
/// angle θ lasts g·|θ| and is cut into ⌈|θ|/dtheta⌉ equal sub-steps.
struct Schedule {
  double g = 20.0;           // time per radian
  double dtheta = 5e-4;      // radians per sub-step
  int sample_stride = 50;    // sub-steps between trace samples

  /// Throws kConfiguration unless g > 0, 0 < dtheta ≤ 0.01 and stride ≥ 1.
  void validate() const;
};

struct TraceSample {
  double time;
  double fidelity;     // |⟨ψ(t)|φ_ground(t)⟩|²
  double expectation;  // ⟨ψ(t)|O|ψ(t)⟩
  RealVector coords;   // instantaneous Hamiltonian vector
};

struct EvolutionTrace {
  std::vector<TraceSample> samples;

  double min_fidelity() const;
  double duration() const { return samples.empty() ? 0.0 : samples.back().time; }
};

struct AdiabaticRun {
  State state;
  EvolutionTrace trace;
};

/// Normalized eigenvector of the lowest eigenvalue. The first component with
/// magnitude above 1e-8 is made real and positive. Throws kDegeneracy when the
/// two lowest eigenvalues are closer than 1e-9.
State ground_state(const ComplexMatrix& hamiltonian);

/// Perfectly adiabatic limit: applies rotation_unitary of every step in order.
State ideal_evolve(const State& psi0, const RotationTrack& track, const LieBasis& basis);

/// Finite-time Schrödinger propagation along the track, starting from the
/// Hamiltonian n0. Each sub-step applies exp(−i H(n_mid) g δθ) with n_mid the
/// sub-arc midpoint. The trace holds t = 0, every sample_stride-th sub-step
/// and the final instant.
AdiabaticRun adiabatic_evolve(const State& psi0, const HamiltonianVector& n0,
                              const RotationTrack& track, const Schedule& schedule,
                              const ComplexMatrix& observable);

/// |⟨a|b⟩|², clamped to [0, 1].
double fidelity(const State& a, const State& b);

/// Re ⟨ψ|O|ψ⟩. Throws kContractViolation when max |O − O†| > 1e-10.
double expectation(const State& psi, const ComplexMatrix& observable);

}  // namespace aql
