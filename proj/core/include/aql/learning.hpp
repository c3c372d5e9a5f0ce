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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aql/dataset.hpp"
#include "aql/evolver.hpp"
#include "aql/ham_space.hpp"

namespace aql {

/// Encoding rotation: its angle is the raw feature value x[feature_index] in radians.
struct EncodingStep {
  RealVector axis;
  int feature_index = 0;
};

struct EncodingBlock {
  std::vector<EncodingStep> steps;
};

/// Trainable rotations; each axis carries one parameter.
struct VariationalBlock {
  std::vector<RealVector> axes;
};

struct LearningUnit {
  EncodingBlock encoding;
  VariationalBlock variational;
};

/// Trainable angles w_1..w_M, laid out unit by unit in declaration order.
class ParameterVector {
 public:
  ParameterVector() = default;
  explicit ParameterVector(std::vector<double> values) : values_(std::move(values)) {}
  static ParameterVector zeros(std::size_t count) { return ParameterVector(std::vector<double>(count, 0.0)); }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& vector() const noexcept { return values_; }

  friend bool operator==(const ParameterVector&, const ParameterVector&) = default;

 private:
  std::vector<double> values_;
};

/// Initial Hamiltonian, repeated (encoding, variational) units and the
/// measured observable. Starting state is the ground state of H(n0).
class LearningModel {
 public:
  /// Validates axes against the basis, that every unit has the same encoding
  /// structure, that each variational block has at least one axis, and that
  /// feature indices are below input_dimension. Throws kShape or kInvalidInput.
  LearningModel(HamiltonianVector n0, std::vector<LearningUnit> units, ComplexMatrix observable,
                int input_dimension);

  const LieBasis& basis() const noexcept { return n0_.basis(); }
  const HamiltonianVector& initial_vector() const noexcept { return n0_; }
  const std::vector<LearningUnit>& units() const noexcept { return units_; }
  const ComplexMatrix& observable() const noexcept { return observable_; }
  int input_dimension() const noexcept { return input_dimension_; }
  std::size_t parameter_count() const noexcept { return parameter_count_; }
  /// Ground state of H(n0), computed once.
  const State& initial_state() const noexcept { return initial_state_; }

 private:
  HamiltonianVector n0_;
  std::vector<LearningUnit> units_;
  ComplexMatrix observable_;
  int input_dimension_;
  std::size_t parameter_count_ = 0;
  State initial_state_;
};

/// Per unit: encoding steps (angle = feature) then variational steps (angle = weight).
RotationTrack build_track(const LearningModel& model, std::span<const double> x,
                          const ParameterVector& w);

/// ⟨O⟩ after ideal (perfectly adiabatic) evolution from the initial ground state.
double predict_ideal(const LearningModel& model, std::span<const double> x,
                     const ParameterVector& w);

struct AdiabaticPrediction {
  double value;
  EvolutionTrace trace;
};

/// ⟨O⟩ after finite-time evolution under the schedule.
AdiabaticPrediction predict_adiabatic(const LearningModel& model, std::span<const double> x,
                                      const ParameterVector& w, const Schedule& schedule);

/// 0 when e ≤ 0, 1 when e > 0.
int classify(double e) noexcept;

/// Regression target for a label: 1 → +1, 0 → −1.
double target_for_label(int label);

/// Σ_i (predict_ideal(x_i) − t_i)². Throws kInvalidInput on an empty dataset.
double loss(const LearningModel& model, const Dataset& data, const ParameterVector& w);

/// Fraction of samples whose ideal prediction classifies to the label.
double training_accuracy(const LearningModel& model, const Dataset& data,
                         const ParameterVector& w);

enum class TrainerMethod { kCobyla, kNelderMead };

struct TrainerConfig {
  TrainerMethod method = TrainerMethod::kCobyla;
  std::optional<ParameterVector> initial;  // zeros when absent
  int max_evaluations = 2000;              // shared by all starts
  double tolerance = 1e-6;                 // final trust radius / simplex size
  double initial_step = 0.5;               // initial trust radius / simplex edge
  std::uint64_t seed = 0;
  int restarts = 0;  // extra starts drawn uniformly from [−π, π)^M
};

struct TrainReport {
  int evaluations = 0;
  int starts = 0;
  double initial_loss = 0.0;
  double final_loss = 0.0;
  double training_accuracy = 0.0;
  bool improved = false;               // final_loss < initial_loss
  std::vector<double> loss_curve;      // best loss after each evaluation
};

struct TrainResult {
  ParameterVector weights;
  TrainReport report;
};

/// Minimizes loss() over the ideal prediction. Never returns weights whose
/// loss exceeds that of the initial point. Deterministic for a given seed.
/// Throws kConfiguration for a budget below 1 and kInvalidInput for an empty dataset.
TrainResult train(const LearningModel& model, const Dataset& data, const TrainerConfig& config);

/// [f(w + (π/2)e_i) − f(w − (π/2)e_i)] / 2 for the ideal prediction f. Exact
/// for D = 2, where every unit-axis generator has eigenvalues ±1; throws
/// kUnsupportedDimension otherwise.
double parameter_shift_gradient(const LearningModel& model, std::span<const double> x,
                                const ParameterVector& w, std::size_t index);

}  // namespace aql
