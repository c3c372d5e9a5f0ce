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

#include "aql/ham_space.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "aql/error.hpp"

namespace aql {
namespace {

constexpr double kUnitTolerance = 1e-10;
constexpr double kRenormalizeDrift = 1e-12;
constexpr double kSkewTolerance = 1e-8;
constexpr int kTaylorOrder = 18;

void require_length(const RealVector& v, const LieBasis& basis, const char* what) {
  if (v.size() != basis.size()) {
    fail(ErrorKind::kShape, std::string(what) + " has length " + std::to_string(v.size()) +
                                ", basis expects " + std::to_string(basis.size()));
  }
}

void require_unit(const RealVector& v, const char* what) {
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > kUnitTolerance) {
    fail(ErrorKind::kContractViolation,
         std::string(what) + " must be a unit vector, norm is " + std::to_string(norm));
  }
}

}  // namespace

HamiltonianVector::HamiltonianVector(BasisHandle basis, RealVector coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
  require(basis_ != nullptr, ErrorKind::kInvalidInput, "Hamiltonian vector needs a basis");
  require_length(coords_, *basis_, "Hamiltonian vector");
  require_unit(coords_, "Hamiltonian vector");
}

HamiltonianVector HamiltonianVector::normalized(BasisHandle basis, RealVector coords) {
  const double norm = coords.norm();
  require(norm > 0.0, ErrorKind::kContractViolation, "cannot normalize a zero vector");
  coords /= norm;
  return HamiltonianVector(std::move(basis), std::move(coords));
}

RotationStep::RotationStep(RealVector axis_in, double angle_in)
    : axis(std::move(axis_in)), angle(angle_in) {
  require_unit(axis, "rotation axis");
}

double RotationTrack::total_angle() const noexcept {
  double sum = 0.0;
  for (const auto& step : steps) sum += std::abs(step.angle);
  return sum;
}

RealMatrix rotation_generator(const RealVector& axis, const LieBasis& basis) {
  require_length(axis, basis, "rotation axis");
  const int d = basis.size();
  const auto& c = basis.structure();
  RealMatrix a = RealMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      double sum = 0.0;
      for (int k = 0; k < d; ++k) sum += c(j, i, k) * axis[k];
      a(i, j) = sum;
      a(j, i) = -sum;
    }
  }
  return a;
}

RealMatrix rotation_matrix(const RealMatrix& generator, double angle) {
  require(generator.rows() == generator.cols(), ErrorKind::kShape, "generator must be square");
  const double asymmetry = (generator + generator.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > kSkewTolerance) {
    fail(ErrorKind::kContractViolation,
         "rotation generator is not skew-symmetric (max |A + Aᵀ| = " + std::to_string(asymmetry) +
             ")");
  }
  const int d = static_cast<int>(generator.rows());
  RealMatrix x = angle * generator;
  // Scale so that ‖X‖₁ ≤ 1/2; the order-18 Taylor remainder is then far below 1e-16.
  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  x /= std::ldexp(1.0, squarings);

  RealMatrix result = RealMatrix::Identity(d, d);
  RealMatrix term = RealMatrix::Identity(d, d);
  for (int k = 1; k <= kTaylorOrder; ++k) {
    term = (term * x) / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

RealMatrix rotation_matrix_so3(const RealMatrix& generator, double angle) {
  require(generator.rows() == 3 && generator.cols() == 3, ErrorKind::kShape,
          "closed-form rotation needs a 3x3 generator");
  // cosθ I + sinθ A + (1 − cosθ) m mᵀ, written with m mᵀ = I + A² for a unit axis
  return RealMatrix::Identity(3, 3) + std::sin(angle) * generator +
         (1.0 - std::cos(angle)) * generator * generator;
}

HamiltonianVector rotate_vector(const HamiltonianVector& n, const RotationStep& step) {
  const LieBasis& basis = n.basis();
  require_length(step.axis, basis, "rotation axis");

  RealVector out;
  if (basis.size() == 3) {
    const Eigen::Vector3d v = n.coords();
    const Eigen::Vector3d m = step.axis;
    const double c = std::cos(step.angle);
    const double s = std::sin(step.angle);
    out = c * v - s * v.cross(m) + (1.0 - c) * m.dot(v) * m;
  } else {
    out = rotation_matrix(rotation_generator(step.axis, basis), step.angle) * n.coords();
  }
  const double norm = out.norm();
  if (std::abs(norm - 1.0) > kRenormalizeDrift) out /= norm;
  return HamiltonianVector(n.basis_handle(), std::move(out));
}

HamiltonianVector rotate_along(const HamiltonianVector& n, const RotationTrack& track) {
  HamiltonianVector current = n;
  for (const auto& step : track.steps) current = rotate_vector(current, step);
  return current;
}

ComplexMatrix hamiltonian_matrix(const RealVector& coords, const LieBasis& basis) {
  require_length(coords, basis, "Hamiltonian vector");
  const int dim = basis.dimension();
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int a = 0; a < basis.size(); ++a) {
    if (coords[a] != 0.0) h += coords[a] * basis.generator(a);
  }
  return h;
}

RealVector vector_coords(const ComplexMatrix& hamiltonian, const LieBasis& basis) {
  const int dim = basis.dimension();
  require(hamiltonian.rows() == dim && hamiltonian.cols() == dim, ErrorKind::kShape,
          "matrix does not match the basis dimension");
  RealVector out(basis.size());
  for (int a = 0; a < basis.size(); ++a) {
    out[a] = 0.5 * (hamiltonian.transpose().cwiseProduct(basis.generator(a))).sum().real();
  }
  return out;
}

ComplexMatrix hermitian_propagator(const ComplexMatrix& hamiltonian, double t) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hamiltonian);
  const RealVector& evals = solver.eigenvalues();
  ComplexVector phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) phases[i] = std::exp(-kI * (evals[i] * t));
  const ComplexMatrix& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

ComplexMatrix rotation_unitary(const RealVector& axis, double angle, const LieBasis& basis) {
  require_length(axis, basis, "rotation axis");
  require_unit(axis, "rotation axis");
  const ComplexMatrix m = hamiltonian_matrix(axis, basis);
  if (basis.dimension() == 2) {
    // (m·σ)² = I for a unit axis.
    const double half = 0.5 * angle;
    return std::cos(half) * ComplexMatrix::Identity(2, 2) - kI * std::sin(half) * m;
  }
  return hermitian_propagator(m, 0.5 * angle);
}

}  // namespace aql
