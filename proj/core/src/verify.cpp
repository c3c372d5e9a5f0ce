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

#include "aql/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "aql/error.hpp"
#include "aql/ham_space.hpp"
#include "aql/random.hpp"
#include "aql/su_basis.hpp"

namespace aql {
namespace {

RealVector random_unit(Rng& rng, int d) {
  RealVector v(d);
  do {
    for (int i = 0; i < d; ++i) {
      // Box-Muller on the portable uniform source.
      const double u1 = 1.0 - rng.uniform01();
      const double u2 = rng.uniform01();
      v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
  } while (v.norm() < 1e-8);
  return v.normalized();
}

RealVector sorted_eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();  // ascending
}

}  // namespace

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

VerifyReport run_verification(int dim, int trials, std::uint64_t seed) {
  require(dim >= 2 && dim <= 4, ErrorKind::kInvalidDimension,
          fmt::format("verify supports D in {{2, 3, 4}}, got {}", dim));
  require(trials >= 1, ErrorKind::kInvalidInput, "trials must be at least 1");

  VerifyReport report{dim, trials, seed, {}};
  const BasisHandle basis = build_su_basis(dim);
  const int d = basis->size();
  const auto& e = basis->generators();
  const auto& c = basis->structure();

  VerifyCheck ortho{"basis_orthonormality", 0.0, 1e-12};
  for (int a = 0; a < d; ++a) {
    ortho.max_residual = std::max(ortho.max_residual, (e[a] - e[a].adjoint()).cwiseAbs().maxCoeff());
    ortho.max_residual = std::max(ortho.max_residual, std::abs(e[a].trace()));
    for (int b = 0; b < d; ++b) {
      const double expected = a == b ? 2.0 : 0.0;
      ortho.max_residual = std::max(ortho.max_residual, std::abs((e[a] * e[b]).trace() - expected));
    }
  }

  VerifyCheck anti{"structure_antisymmetry", 0.0, 1e-12};
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int k = 0; k < d; ++k) {
        anti.max_residual = std::max({anti.max_residual, std::abs(c(a, b, k) + c(b, a, k)),
                                      std::abs(c(a, b, k) + c(a, k, b))});
      }
    }
  }

  VerifyCheck commutator{"commutator_reconstruction", 0.0, 1e-10};
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      ComplexMatrix rhs = ComplexMatrix::Zero(dim, dim);
      for (int k = 0; k < d; ++k) rhs += 2.0 * kI * c(a, b, k) * e[k];
      const ComplexMatrix lhs = e[a] * e[b] - e[b] * e[a];
      commutator.max_residual = std::max(commutator.max_residual, (lhs - rhs).norm());
    }
  }

  VerifyCheck skew{"generator_skew", 0.0, 1e-12};
  VerifyCheck orthogonal{"rotation_orthogonality", 0.0, 1e-10};
  VerifyCheck composition{"rotation_composition", 0.0, 1e-9};
  VerifyCheck spectrum{"spectrum_preservation", 0.0, 1e-9};
  VerifyCheck conjugation{"conjugation_equivalence", 0.0, 1e-9};
  VerifyCheck closed_form{"closed_form_vs_exponential", 0.0, 1e-12};

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const HamiltonianVector n(basis, random_unit(rng, d));
    const RealVector m = random_unit(rng, d);
    const double theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const double theta2 = rng.uniform(-std::numbers::pi, std::numbers::pi);

    const RealMatrix gen = rotation_generator(m, *basis);
    skew.max_residual = std::max(skew.max_residual, (gen + gen.transpose()).cwiseAbs().maxCoeff());

    const RealMatrix r = rotation_matrix(gen, theta);
    orthogonal.max_residual =
        std::max({orthogonal.max_residual,
                  (r.transpose() * r - RealMatrix::Identity(d, d)).cwiseAbs().maxCoeff(),
                  std::abs(r.determinant() - 1.0)});

    const HamiltonianVector rotated = rotate_vector(n, RotationStep(m, theta));
    const HamiltonianVector twice = rotate_vector(rotated, RotationStep(m, theta2));
    const HamiltonianVector once = rotate_vector(n, RotationStep(m, theta + theta2));
    composition.max_residual =
        std::max(composition.max_residual, (twice.coords() - once.coords()).cwiseAbs().maxCoeff());

    const ComplexMatrix h = hamiltonian_matrix(n);
    const ComplexMatrix h_rotated = hamiltonian_matrix(rotated);
    spectrum.max_residual =
        std::max(spectrum.max_residual,
                 (sorted_eigenvalues(h) - sorted_eigenvalues(h_rotated)).cwiseAbs().maxCoeff());

    const ComplexMatrix u = rotation_unitary(m, theta, *basis);
    conjugation.max_residual =
        std::max(conjugation.max_residual, (u * h * u.adjoint() - h_rotated).norm());

    if (d == 3) {
      const RealVector via_exp = r * n.coords();
      closed_form.max_residual = std::max(
          {closed_form.max_residual, (via_exp - rotated.coords()).cwiseAbs().maxCoeff(),
           (rotation_matrix_so3(gen, theta) - r).cwiseAbs().maxCoeff()});
    }
  }

  report.checks = {ortho, anti, commutator, skew, orthogonal, composition, spectrum, conjugation};
  if (d == 3) report.checks.push_back(closed_form);
  return report;
}

}  // namespace aql
