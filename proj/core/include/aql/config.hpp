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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aql/evolver.hpp"
#include "aql/learning.hpp"
#include "aql/tasks.hpp"

namespace aql {

/// Everything one CLI run needs. Defaults depend on the task; see
/// default_config().
struct ExperimentConfig {
  TaskId task = TaskId::kCase1;
  int units = 3;
  Schedule schedule;

  TrainerMethod method = TrainerMethod::kCobyla;
  int budget = 2000;
  double tolerance = 1e-6;
  double initial_step = 0.5;
  int restarts = 0;

  std::uint64_t seed = 0;

  int train_size = 20;
  SamplingMode train_mode = SamplingMode::kRandom;
  int test_size = 100;
  SamplingMode test_mode = SamplingMode::kGrid;

  // Evaluation/trace weights, or the starting point for training.
  std::optional<ParameterVector> weights;
  std::vector<double> trace_x;

  std::filesystem::path output_dir = "out";

  // Independent streams derived from the run seed.
  std::uint64_t train_seed() const noexcept { return seed; }
  std::uint64_t test_seed() const noexcept { return seed + 1; }
  std::uint64_t trainer_seed() const noexcept { return seed + 2; }
};

/// Case 1: 20 random training points, 100-point test grid, budget 2000.
/// Case 2: 200 random training points, 200 random test points, budget 5000.
ExperimentConfig default_config(TaskId task);

/// Parses INI text:
///
///   [task]     name = case1|case2, units
///   [schedule] g, dtheta, stride
///   [trainer]  method = cobyla|nelder-mead, budget, tolerance, initial_step, restarts
///   [run]      seed
///   [data]     train_size, train_mode, test_size, test_mode (grid|random)
///   [model]    weights = comma list | reference
///   [trace]    x = comma list
///   [output]   dir
///
/// Missing keys take the task defaults; unknown keys are rejected.
/// Throws kConfiguration on bad values and kIo on unreadable files.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Checks every field and the weights length against the model.
/// Throws kConfiguration.
void validate(const ExperimentConfig& config);

/// Canonical INI rendering; parse_config(write_config(c)) reproduces c.
std::string write_config(const ExperimentConfig& config);

/// `index,value` rows as written by the train command. Throws kIo / kInvalidInput.
ParameterVector read_weights_csv(const std::filesystem::path& path);
void write_weights_csv(std::ostream& out, const ParameterVector& w);

std::string_view to_string(TrainerMethod method);
TrainerMethod parse_trainer_method(std::string_view name);

}  // namespace aql
