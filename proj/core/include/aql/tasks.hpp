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
#include <string>
#include <string_view>
#include <vector>

#include "aql/dataset.hpp"
#include "aql/learning.hpp"

namespace aql {

enum class TaskId { kCase1, kCase2 };
enum class SamplingMode { kGrid, kRandom };
enum class Predictor { kIdeal, kAdiabatic };

std::string_view to_string(TaskId task);
std::string_view to_string(SamplingMode mode);
/// Throws kConfiguration for unknown names.
TaskId parse_task(std::string_view name);
SamplingMode parse_sampling_mode(std::string_view name);

/// 1 when |x| > 1/3, else 0.
int case1_label(double x) noexcept;

/// 0 inside or on the circle x1² + x2² = 2/π (half the area of [−1,1]²), else 1.
int case2_label(double x1, double x2) noexcept;

/// count points on [−1, 1]: an inclusive even grid or seeded uniform draws.
/// Throws kInvalidInput when count < 1.
Dataset gen_case1(int count, SamplingMode mode, std::uint64_t seed);

/// count seeded uniform points on [−1, 1]². Throws kInvalidInput when count < 1.
Dataset gen_case2(int count, std::uint64_t seed);

/// Qubit model starting from H0 = −σ_z, measuring σ_z. Each unit encodes x
/// with one x-axis rotation, then rotates about z, y, z by three weights.
LearningModel case1_model(int units = 3);

/// As case1_model, but each unit encodes (x1, x2) as a z-rotation by x1
/// followed by a y-rotation by x2.
LearningModel case2_model(int units = 3);

LearningModel task_model(TaskId task, int units = 3);

/// Published weights for the two tasks, unit by unit.
ParameterVector case1_reference_weights();
ParameterVector case2_reference_weights();

struct SamplePrediction {
  Sample sample;
  double ideal = 0.0;
  std::optional<double> adiabatic;
  int predicted = 0;  // classify() of the selected predictor
  bool correct = false;
};

/// Per-sample predictions; the adiabatic column is filled when a schedule is given.
/// `predictor` selects which value feeds the predicted label. Throws
/// kConfiguration when the adiabatic predictor is requested without a schedule
/// and kInvalidInput for an empty dataset.
std::vector<SamplePrediction> predict_dataset(const LearningModel& model, const ParameterVector& w,
                                              const Dataset& data, Predictor predictor,
                                              const std::optional<Schedule>& schedule);

struct AccuracyResult {
  double accuracy = 0.0;
  std::vector<Sample> misclassified;
};

AccuracyResult accuracy(const LearningModel& model, const ParameterVector& w, const Dataset& data,
                        Predictor predictor, const std::optional<Schedule>& schedule = {});

AccuracyResult summarize(const std::vector<SamplePrediction>& rows);

/// Distance from a sample to its task's decision boundary
/// (|x| = 1/3 for case 1, the circle of radius √(2/π) for case 2).
double boundary_distance(TaskId task, const Sample& sample);

}  // namespace aql
