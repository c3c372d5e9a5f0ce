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

#include "aql/evolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "aql/error.hpp"

namespace aql {
namespace {

constexpr double kDegeneracyGap = 1e-9;
constexpr double kPhaseThreshold = 1e-8;
constexpr double kHermitianTolerance = 1e-10;
constexpr double kMaxDtheta = 0.01;

void require_state(const State& psi, int dim) {
  require(psi.size() == dim, ErrorKind::kShape,
          "state has dimension " + std::to_string(psi.size()) + ", expected " +
              std::to_string(dim));
}

// Rodrigues rotation with cached trig values, d = 3 only.
struct So3Arc {
  Eigen::Vector3d axis;
  double cos_full, sin_full, cos_half, sin_half;

  So3Arc(const RealVector& m, double delta)
      : axis(m),
        cos_full(std::cos(delta)),
        sin_full(std::sin(delta)),
        cos_half(std::cos(0.5 * delta)),
        sin_half(std::sin(0.5 * delta)) {}

  static Eigen::Vector3d apply(const Eigen::Vector3d& n, const Eigen::Vector3d& m, double c,
                               double s) {
    return c * n - s * n.cross(m) + (1.0 - c) * m.dot(n) * m;
  }
};

// Sub-step propagator for a unit Hamiltonian vector in su(2):
// exp(−iτ n·σ) = cos τ I − i sin τ n·σ.
Eigen::Matrix2cd qubit_propagator(const Eigen::Vector3d& n, double tau) {
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  Eigen::Matrix2cd u;
  u(0, 0) = Complex(c, -s * n[2]);
  u(1, 1) = Complex(c, s * n[2]);
  u(0, 1) = Complex(-s * n[1], -s * n[0]);
  u(1, 0) = Complex(s * n[1], -s * n[0]);
  return u;
}

}  // namespace

void Schedule::validate() const {
  require(std::isfinite(g) && g > 0.0, ErrorKind::kConfiguration,
          "schedule g must be positive, got " + std::to_string(g));
  require(std::isfinite(dtheta) && dtheta > 0.0 && dtheta <= kMaxDtheta,
          ErrorKind::kConfiguration,
          "schedule dtheta must lie in (0, 0.01], got " + std::to_string(dtheta));
  require(sample_stride >= 1, ErrorKind::kConfiguration, "trace stride must be at least 1");
}

double EvolutionTrace::min_fidelity() const {
  double out = 1.0;
  for (const auto& s : samples) out = std::min(out, s.fidelity);
  return out;
}

State ground_state(const ComplexMatrix& hamiltonian) {
  require(hamiltonian.rows() == hamiltonian.cols() && hamiltonian.rows() >= 1, ErrorKind::kShape,
          "Hamiltonian must be a non-empty square matrix");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hamiltonian);
  const RealVector& evals = solver.eigenvalues();
  if (evals.size() > 1 && evals[1] - evals[0] < kDegeneracyGap) {
    fail(ErrorKind::kDegeneracy, "ground level is degenerate (gap " +
                                     std::to_string(evals[1] - evals[0]) + ")");
  }
  State psi = solver.eigenvectors().col(0);
  psi.normalize();
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (std::abs(psi[i]) > kPhaseThreshold) {
      psi *= std::conj(psi[i]) / std::abs(psi[i]);
      psi[i] = std::abs(psi[i]);
      break;
    }
  }
  return psi;
}

State ideal_evolve(const State& psi0, const RotationTrack& track, const LieBasis& basis) {
  require_state(psi0, basis.dimension());
  State psi = psi0;
  for (const auto& step : track.steps) {
    psi = rotation_unitary(step.axis, step.angle, basis) * psi;
  }
  psi.normalize();
  return psi;
}

AdiabaticRun adiabatic_evolve(const State& psi0, const HamiltonianVector& n0,
                              const RotationTrack& track, const Schedule& schedule,
                              const ComplexMatrix& observable) {
  schedule.validate();
  const LieBasis& basis = n0.basis();
  const int dim = basis.dimension();
  require_state(psi0, dim);

  AdiabaticRun run;
  run.state = psi0;
  RealVector n = n0.coords();
  double time = 0.0;
  long substep = 0;
  long last_sampled = -1;

  auto record = [&] {
    const ComplexMatrix h = hamiltonian_matrix(n, basis);
    run.trace.samples.push_back(TraceSample{time, fidelity(run.state, ground_state(h)),
                                            expectation(run.state, observable), n});
    last_sampled = substep;
  };
  record();

  for (const auto& step : track.steps) {
    require(step.axis.size() == basis.size(), ErrorKind::kShape,
            "rotation axis does not match the basis");
    const long pieces = static_cast<long>(std::ceil(std::abs(step.angle) / schedule.dtheta));
    if (pieces == 0) continue;
    const double delta = step.angle / static_cast<double>(pieces);
    const double tau = schedule.g * std::abs(delta);

    if (dim == 2) {
      const So3Arc arc(step.axis, delta);
      Eigen::Vector3d v = n;
      Eigen::Vector2cd psi = run.state;
      for (long j = 0; j < pieces; ++j) {
        const Eigen::Vector3d mid = So3Arc::apply(v, arc.axis, arc.cos_half, arc.sin_half);
        psi = qubit_propagator(mid.normalized(), tau) * psi;
        v = So3Arc::apply(v, arc.axis, arc.cos_full, arc.sin_full);
        v.normalize();
        ++substep;
        time += tau;
        if (substep % schedule.sample_stride == 0) {
          n = v;
          run.state = psi;
          record();
        }
      }
      n = v;
      run.state = psi;
    } else {
      const RealMatrix gen = rotation_generator(step.axis, basis);
      const RealMatrix full = rotation_matrix(gen, delta);
      const RealMatrix half = rotation_matrix(gen, 0.5 * delta);
      for (long j = 0; j < pieces; ++j) {
        const RealVector mid = half * n;
        run.state = hermitian_propagator(hamiltonian_matrix(mid, basis), tau) * run.state;
        n = full * n;
        n.normalize();
        ++substep;
        time += tau;
        if (substep % schedule.sample_stride == 0) record();
      }
    }
  }
  if (last_sampled != substep) record();
  run.state.normalize();
  return run;
}

double fidelity(const State& a, const State& b) {
  require(a.size() == b.size(), ErrorKind::kShape, "fidelity needs states of equal dimension");
  return std::clamp(std::norm(a.dot(b)), 0.0, 1.0);
}

double expectation(const State& psi, const ComplexMatrix& observable) {
  require(observable.rows() == psi.size() && observable.cols() == psi.size(), ErrorKind::kShape,
          "observable does not match the state dimension");
  const double asym = (observable - observable.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance) {
    fail(ErrorKind::kContractViolation,
         "observable is not Hermitian (max |O - O†| = " + std::to_string(asym) + ")");
  }
  return psi.dot(observable * psi).real();
}

}  // namespace aql
