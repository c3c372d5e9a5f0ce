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
#include <iosfwd>

#include "aql/config.hpp"

namespace aql {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitOptimizerStall = 3;
inline constexpr int kExitInternal = 70;

/// Trains on the seeded training set and writes weights.csv, loss_curve.csv,
/// train_summary.csv and train_data.csv to the output directory. Config
/// weights, when present, are the starting point. Returns kExitOptimizerStall
/// when the loss did not improve on the starting point.
int cmd_train(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Scores the test set with both predictors; the adiabatic value decides the
/// label. Writes predictions.csv, misclassified.csv, evaluate_summary.csv and
/// test_data.csv. Weights come from the config, else from weights.csv in the
/// output directory.
int cmd_evaluate(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// One adiabatic run at config.trace_x: trace.csv (t, fidelity, expectation,
/// n1..nd) and trace_summary.csv.
int cmd_trace(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Runs the invariant suite and prints one line per check.
int cmd_verify(int dim, int trials, std::uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace aql
