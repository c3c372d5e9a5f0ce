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

#include "aql/learning.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "aql/cobyla.hpp"
#include "aql/error.hpp"
#include "aql/nelder_mead.hpp"
#include "aql/random.hpp"

namespace aql {
namespace {

constexpr double kAxisTolerance = 1e-10;

void check_axis(const RealVector& axis, const LieBasis& basis, const std::string& where) {
  require(axis.size() == basis.size(), ErrorKind::kShape,
          fmt::format("{}: axis length {} does not match basis size {}", where, axis.size(),
                      basis.size()));
  require(std::abs(axis.norm() - 1.0) <= kAxisTolerance, ErrorKind::kInvalidInput,
          fmt::format("{}: axis is not a unit vector", where));
}

void check_inputs(const LearningModel& model, std::span<const double> x,
                  const ParameterVector& w) {
  require(static_cast<int>(x.size()) == model.input_dimension(), ErrorKind::kShape,
          fmt::format("input has {} features, model expects {}", x.size(),
                      model.input_dimension()));
  require(w.size() == model.parameter_count(), ErrorKind::kShape,
          fmt::format("parameter vector has {} entries, model expects {}", w.size(),
                      model.parameter_count()));
}

// exp(−i(θ/2) m·σ) applied in place, m a unit 3-vector.
void apply_qubit_rotation(Eigen::Vector2cd& psi, const RealVector& m, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const Complex a = psi[0];
  const Complex b = psi[1];
  // m·σ = [[m3, m1 − i m2], [m1 + i m2, −m3]]
  psi[0] = c * a - kI * s * (m[2] * a + Complex(m[0], -m[1]) * b);
  psi[1] = c * b - kI * s * (Complex(m[0], m[1]) * a - m[2] * b);
}

double predict_qubit(const LearningModel& model, std::span<const double> x,
                     const ParameterVector& w) {
  Eigen::Vector2cd psi = model.initial_state();
  std::size_t p = 0;
  for (const auto& unit : model.units()) {
    for (const auto& step : unit.encoding.steps) {
      apply_qubit_rotation(psi, step.axis, x[static_cast<std::size_t>(step.feature_index)]);
    }
    for (const auto& axis : unit.variational.axes) apply_qubit_rotation(psi, axis, w[p++]);
  }
  const Eigen::Matrix2cd& o = model.observable();
  return psi.dot(o * psi).real();
}

}  // namespace

LearningModel::LearningModel(HamiltonianVector n0, std::vector<LearningUnit> units,
                             ComplexMatrix observable, int input_dimension)
    : n0_(std::move(n0)),
      units_(std::move(units)),
      observable_(std::move(observable)),
      input_dimension_(input_dimension) {
  const LieBasis& b = n0_.basis();
  require(input_dimension_ >= 0, ErrorKind::kInvalidInput, "negative input dimension");
  require(observable_.rows() == b.dimension() && observable_.cols() == b.dimension(),
          ErrorKind::kShape, "observable does not match the Hilbert-space dimension");
  require((observable_ - observable_.adjoint()).cwiseAbs().maxCoeff() <= 1e-10,
          ErrorKind::kInvalidInput, "observable must be Hermitian");
  for (std::size_t u = 0; u < units_.size(); ++u) {
    const auto& unit = units_[u];
    const std::string where = fmt::format("unit {}", u);
    for (const auto& step : unit.encoding.steps) {
      check_axis(step.axis, b, where + " encoding");
      require(step.feature_index >= 0 && step.feature_index < input_dimension_,
              ErrorKind::kInvalidInput,
              fmt::format("{}: feature index {} out of range", where, step.feature_index));
    }
    require(!unit.variational.axes.empty(), ErrorKind::kInvalidInput,
            where + ": variational block needs at least one axis");
    for (const auto& axis : unit.variational.axes) check_axis(axis, b, where + " variational");
    parameter_count_ += unit.variational.axes.size();

    // Data re-uploading: every unit encodes the input the same way.
    const auto& first = units_.front().encoding.steps;
    bool same = first.size() == unit.encoding.steps.size();
    for (std::size_t k = 0; same && k < first.size(); ++k) {
      same = first[k].feature_index == unit.encoding.steps[k].feature_index &&
             first[k].axis == unit.encoding.steps[k].axis;
    }
    require(same, ErrorKind::kInvalidInput, where + ": encoding block differs from unit 0");
  }
  initial_state_ = ground_state(hamiltonian_matrix(n0_));
}

RotationTrack build_track(const LearningModel& model, std::span<const double> x,
                          const ParameterVector& w) {
  check_inputs(model, x, w);
  RotationTrack track;
  std::size_t p = 0;
  for (const auto& unit : model.units()) {
    for (const auto& step : unit.encoding.steps) {
      track.steps.emplace_back(step.axis, x[static_cast<std::size_t>(step.feature_index)]);
    }
    for (const auto& axis : unit.variational.axes) track.steps.emplace_back(axis, w[p++]);
  }
  return track;
}

double predict_ideal(const LearningModel& model, std::span<const double> x,
                     const ParameterVector& w) {
  check_inputs(model, x, w);
  if (model.basis().dimension() == 2) return predict_qubit(model, x, w);
  const State psi = ideal_evolve(model.initial_state(), build_track(model, x, w), model.basis());
  return expectation(psi, model.observable());
}

AdiabaticPrediction predict_adiabatic(const LearningModel& model, std::span<const double> x,
                                      const ParameterVector& w, const Schedule& schedule) {
  const RotationTrack track = build_track(model, x, w);
  AdiabaticRun run = adiabatic_evolve(model.initial_state(), model.initial_vector(), track,
                                      schedule, model.observable());
  return AdiabaticPrediction{expectation(run.state, model.observable()), std::move(run.trace)};
}

int classify(double e) noexcept { return e > 0.0 ? 1 : 0; }

double target_for_label(int label) { return label == 1 ? 1.0 : -1.0; }

double loss(const LearningModel& model, const Dataset& data, const ParameterVector& w) {
  require(!data.empty(), ErrorKind::kInvalidInput, "loss needs a nonempty dataset");
  double sum = 0.0;
  for (const auto& s : data.samples) {
    const double r = predict_ideal(model, s.features, w) - target_for_label(s.label);
    sum += r * r;
  }
  return sum;
}

double training_accuracy(const LearningModel& model, const Dataset& data,
                         const ParameterVector& w) {
  require(!data.empty(), ErrorKind::kInvalidInput, "accuracy needs a nonempty dataset");
  std::size_t hits = 0;
  for (const auto& s : data.samples) {
    if (classify(predict_ideal(model, s.features, w)) == s.label) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(data.size());
}

TrainResult train(const LearningModel& model, const Dataset& data, const TrainerConfig& config) {
  require(config.max_evaluations >= 1, ErrorKind::kConfiguration,
          "training budget must be at least 1 evaluation");
  require(config.restarts >= 0, ErrorKind::kConfiguration, "restarts must be nonnegative");
  require(config.tolerance > 0.0 && config.initial_step >= config.tolerance,
          ErrorKind::kConfiguration, "need 0 < tolerance <= initial step");
  require(!data.empty(), ErrorKind::kInvalidInput, "training needs a nonempty dataset");

  const std::size_t m = model.parameter_count();
  require(m >= 1, ErrorKind::kConfiguration, "model has no trainable parameters");
  ParameterVector start = config.initial.value_or(ParameterVector::zeros(m));
  require(start.size() == m, ErrorKind::kShape,
          fmt::format("initial parameters have {} entries, model expects {}", start.size(), m));

  TrainResult result;
  TrainReport& report = result.report;
  report.initial_loss = loss(model, data, start);
  result.weights = start;
  double best = report.initial_loss;

  auto objective = [&](std::span<const double> values) {
    const ParameterVector w(std::vector<double>(values.begin(), values.end()));
    const double f = loss(model, data, w);
    ++report.evaluations;
    if (f < best) {
      best = f;
      result.weights = w;
    }
    report.loss_curve.push_back(best);
    return f;
  };

  Rng rng(config.seed);
  const int starts = config.restarts + 1;
  for (int s = 0; s < starts; ++s) {
    const int remaining = config.max_evaluations - report.evaluations;
    if (remaining < 1) break;
    // Split what is left evenly over the starts still to run.
    const int budget = remaining / (starts - s);
    if (budget < 1) break;
    std::vector<double> x0 = start.vector();
    if (s > 0) {
      for (auto& v : x0) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    ++report.starts;
    if (config.method == TrainerMethod::kCobyla) {
      CobylaProblem problem;
      problem.objective = objective;
      const CobylaOptions opts{config.initial_step, config.tolerance, budget};
      const auto r = cobyla_minimize(problem, std::move(x0), opts);
      spdlog::debug("cobyla start {}: f = {:.6g} after {} evaluations", s, r.f, r.evaluations);
    } else {
      const NelderMeadOptions opts{config.initial_step, config.tolerance, budget};
      const auto r = nelder_mead_minimize(objective, std::move(x0), opts);
      spdlog::debug("nelder-mead start {}: f = {:.6g} after {} evaluations", s, r.f,
                    r.evaluations);
    }
  }

  report.final_loss = best;
  report.improved = best < report.initial_loss;
  report.training_accuracy = training_accuracy(model, data, result.weights);
  return result;
}

double parameter_shift_gradient(const LearningModel& model, std::span<const double> x,
                                const ParameterVector& w, std::size_t index) {
  require(model.basis().dimension() == 2, ErrorKind::kUnsupportedDimension,
          "the two-term shift rule needs generators with eigenvalues ±1 (D = 2)");
  check_inputs(model, x, w);
  require(index < w.size(), ErrorKind::kShape,
          fmt::format("parameter index {} out of range ({})", index, w.size()));
  constexpr double kShift = std::numbers::pi / 2.0;
  ParameterVector plus = w;
  ParameterVector minus = w;
  plus[index] += kShift;
  minus[index] -= kShift;
  return 0.5 * (predict_ideal(model, x, plus) - predict_ideal(model, x, minus));
}

}  // namespace aql
