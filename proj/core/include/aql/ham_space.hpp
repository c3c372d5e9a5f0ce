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

#include "aql/su_basis.hpp"
#include "aql/types.hpp"

namespace aql {

/// Unit vector n in R^(D²−1) standing for the traceless Hamiltonian H = n·e.
class HamiltonianVector {
 public:
  /// Throws kShape on a length mismatch and kContractViolation when
  /// |‖coords‖ − 1| > 1e-10.
  HamiltonianVector(BasisHandle basis, RealVector coords);

  /// Rescales coords to unit length first; throws kContractViolation on a zero vector.
  static HamiltonianVector normalized(BasisHandle basis, RealVector coords);

  const RealVector& coords() const noexcept { return coords_; }
  const LieBasis& basis() const noexcept { return *basis_; }
  const BasisHandle& basis_handle() const noexcept { return basis_; }
  int size() const noexcept { return static_cast<int>(coords_.size()); }

 private:
  BasisHandle basis_;
  RealVector coords_;
};

/// Rotation about a unit axis m in parameter space by an angle in radians.
/// The rotation is right-handed: for D = 2, rotating (0,0,1) about (0,1,0)
/// by π/2 gives (1,0,0).
struct RotationStep {
  RotationStep(RealVector axis, double angle);

  RealVector axis;
  double angle;
};

/// Ordered sequence of rotations; the empty track is the identity.
struct RotationTrack {
  std::vector<RotationStep> steps;

  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }
  /// Σ |θ_k|.
  double total_angle() const noexcept;
};

/// Skew-symmetric generator of rotations about m: A_ij = Σ_k C_jik m_k, so
/// that R = exp(θA) maps n to the coordinates of U H(n) U† with
/// U = exp(−i(θ/2) m·e). For D = 2 and m = ẑ, A(0,1) = −1 and A(1,0) = 1.
RealMatrix rotation_generator(const RealVector& axis, const LieBasis& basis);

/// exp(θA) for skew A by Taylor scaling-and-squaring. Throws kContractViolation
/// when max |A + Aᵀ| > 1e-8.
RealMatrix rotation_matrix(const RealMatrix& generator, double angle);

/// Closed form cosθ·I + sinθ·A + (1 − cosθ)·m mᵀ = I + sinθ·A + (1 − cosθ)·A²
/// for 3×3 generators of unit axes.
RealMatrix rotation_matrix_so3(const RealMatrix& generator, double angle);

/// n' = R n. Uses n' = cosθ n − sinθ (n × m) + (1 − cosθ)(m·n) m when d = 3
/// and the general matrix exponential otherwise.
HamiltonianVector rotate_vector(const HamiltonianVector& n, const RotationStep& step);

/// Applies every step of a track in order.
HamiltonianVector rotate_along(const HamiltonianVector& n, const RotationTrack& track);

/// Σ_a n_a e_a for a coefficient vector (no unit-norm requirement).
ComplexMatrix hamiltonian_matrix(const RealVector& coords, const LieBasis& basis);

inline ComplexMatrix hamiltonian_matrix(const HamiltonianVector& n) {
  return hamiltonian_matrix(n.coords(), n.basis());
}

/// U = exp(−i(θ/2) m·e), satisfying H(rotate_vector(n, {m, θ})) = U H(n) U†.
ComplexMatrix rotation_unitary(const RealVector& axis, double angle, const LieBasis& basis);

/// Coordinates of a traceless Hermitian matrix: n_a = Tr(H e_a) / 2.
RealVector vector_coords(const ComplexMatrix& hamiltonian, const LieBasis& basis);

/// exp(−i t H) for Hermitian H via its eigendecomposition.
ComplexMatrix hermitian_propagator(const ComplexMatrix& hamiltonian, double t);

}  // namespace aql
