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

#include "aql/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "aql/error.hpp"
#include "aql/random.hpp"

namespace aql {
namespace {

constexpr double kCase1Threshold = 1.0 / 3.0;
constexpr double kCase2RadiusSquared = 2.0 / std::numbers::pi;

RealVector unit_axis(int i) {
  RealVector v = RealVector::Zero(3);
  v[i] = 1.0;
  return v;
}

VariationalBlock zyz_block() { return VariationalBlock{{unit_axis(2), unit_axis(1), unit_axis(2)}}; }

LearningModel qubit_model(const EncodingBlock& encoding, int units, int input_dimension) {
  require(units >= 1, ErrorKind::kConfiguration, "a model needs at least one unit");
  const BasisHandle basis = build_su_basis(2);
  HamiltonianVector n0(basis, RealVector::Unit(3, 2) * -1.0);
  std::vector<LearningUnit> all(static_cast<std::size_t>(units),
                                LearningUnit{encoding, zyz_block()});
  return LearningModel(std::move(n0), std::move(all), basis->generator(2), input_dimension);
}

}  // namespace

std::string_view to_string(TaskId task) { return task == TaskId::kCase1 ? "case1" : "case2"; }

std::string_view to_string(SamplingMode mode) {
  return mode == SamplingMode::kGrid ? "grid" : "random";
}

TaskId parse_task(std::string_view name) {
  if (name == "case1") return TaskId::kCase1;
  if (name == "case2") return TaskId::kCase2;
  fail(ErrorKind::kConfiguration, fmt::format("unknown task '{}' (expected case1|case2)", name));
}

SamplingMode parse_sampling_mode(std::string_view name) {
  if (name == "grid") return SamplingMode::kGrid;
  if (name == "random") return SamplingMode::kRandom;
  fail(ErrorKind::kConfiguration,
       fmt::format("unknown sampling mode '{}' (expected grid|random)", name));
}

int case1_label(double x) noexcept { return std::abs(x) > kCase1Threshold ? 1 : 0; }

int case2_label(double x1, double x2) noexcept {
  return x1 * x1 + x2 * x2 <= kCase2RadiusSquared ? 0 : 1;
}

Dataset gen_case1(int count, SamplingMode mode, std::uint64_t seed) {
  require(count >= 1, ErrorKind::kInvalidInput, "dataset size must be at least 1");
  Dataset data;
  data.samples.reserve(static_cast<std::size_t>(count));
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    double x;
    if (mode == SamplingMode::kGrid) {
      x = count == 1 ? -1.0 : -1.0 + 2.0 * i / static_cast<double>(count - 1);
    } else {
      x = rng.uniform(-1.0, 1.0);
    }
    data.samples.push_back(Sample{{x}, case1_label(x)});
  }
  data.provenance = mode == SamplingMode::kGrid
                        ? fmt::format("case1 grid count={}", count)
                        : fmt::format("case1 random count={} seed={}", count, seed);
  return data;
}

Dataset gen_case2(int count, std::uint64_t seed) {
  require(count >= 1, ErrorKind::kInvalidInput, "dataset size must be at least 1");
  Dataset data;
  data.samples.reserve(static_cast<std::size_t>(count));
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const double x1 = rng.uniform(-1.0, 1.0);
    const double x2 = rng.uniform(-1.0, 1.0);
    data.samples.push_back(Sample{{x1, x2}, case2_label(x1, x2)});
  }
  data.provenance = fmt::format("case2 random count={} seed={}", count, seed);
  return data;
}

LearningModel case1_model(int units) {
  return qubit_model(EncodingBlock{{EncodingStep{unit_axis(0), 0}}}, units, 1);
}

LearningModel case2_model(int units) {
  return qubit_model(EncodingBlock{{EncodingStep{unit_axis(2), 0}, EncodingStep{unit_axis(1), 1}}},
                     units, 2);
}

LearningModel task_model(TaskId task, int units) {
  return task == TaskId::kCase1 ? case1_model(units) : case2_model(units);
}

ParameterVector case1_reference_weights() {
  return ParameterVector({-0.572, 0.643, 0.478, 1.57, 1.886, -1.225, -1.4, -1.568, 0.856});
}

ParameterVector case2_reference_weights() {
  return ParameterVector({-0.268, 1.628, 0.0176, 2.367, 0.1684, 2.796, 1.044, 1.616, 0.866});
}

std::vector<SamplePrediction> predict_dataset(const LearningModel& model, const ParameterVector& w,
                                              const Dataset& data, Predictor predictor,
                                              const std::optional<Schedule>& schedule) {
  require(!data.empty(), ErrorKind::kInvalidInput, "cannot evaluate an empty dataset");
  require(predictor == Predictor::kIdeal || schedule.has_value(), ErrorKind::kConfiguration,
          "the adiabatic predictor needs a schedule");
  std::vector<SamplePrediction> rows;
  rows.reserve(data.size());
  for (const auto& s : data.samples) {
    SamplePrediction row;
    row.sample = s;
    row.ideal = predict_ideal(model, s.features, w);
    if (schedule) row.adiabatic = predict_adiabatic(model, s.features, w, *schedule).value;
    const double chosen = predictor == Predictor::kIdeal ? row.ideal : *row.adiabatic;
    row.predicted = classify(chosen);
    row.correct = row.predicted == s.label;
    rows.push_back(std::move(row));
  }
  return rows;
}

AccuracyResult summarize(const std::vector<SamplePrediction>& rows) {
  AccuracyResult out;
  if (rows.empty()) return out;
  std::size_t hits = 0;
  for (const auto& r : rows) {
    if (r.correct) {
      ++hits;
    } else {
      out.misclassified.push_back(r.sample);
    }
  }
  out.accuracy = static_cast<double>(hits) / static_cast<double>(rows.size());
  return out;
}

AccuracyResult accuracy(const LearningModel& model, const ParameterVector& w, const Dataset& data,
                        Predictor predictor, const std::optional<Schedule>& schedule) {
  // Only the requested predictor is run.
  std::optional<Schedule> used = predictor == Predictor::kAdiabatic ? schedule : std::nullopt;
  require(predictor == Predictor::kIdeal || used.has_value(), ErrorKind::kConfiguration,
          "the adiabatic predictor needs a schedule");
  return summarize(predict_dataset(model, w, data, predictor, used));
}

double boundary_distance(TaskId task, const Sample& sample) {
  if (task == TaskId::kCase1) return std::abs(std::abs(sample.features.at(0)) - kCase1Threshold);
  const double r = std::hypot(sample.features.at(0), sample.features.at(1));
  return std::abs(r - std::sqrt(kCase2RadiusSquared));
}

}  // namespace aql
