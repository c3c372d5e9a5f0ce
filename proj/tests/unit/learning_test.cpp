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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "aql/error.hpp"
#include "aql/learning.hpp"
#include "aql/tasks.hpp"
#include "oracles.hpp"

namespace aql {
namespace {

using std::numbers::pi;

const RealVector kX = RealVector::Unit(3, 0);
const RealVector kY = RealVector::Unit(3, 1);
const RealVector kZ = RealVector::Unit(3, 2);

template <typename F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

LearningModel qubit_model(RealVector n0, std::vector<LearningUnit> units, int inputs) {
  const BasisHandle b = build_su_basis(2);
  return LearningModel(HamiltonianVector(b, std::move(n0)), std::move(units), b->generator(2), inputs);
}

// ⟨σ_z⟩ in the ground state of the final Hamiltonian, whose Bloch vector is −n.
double oracle_prediction(const LearningModel& model, std::span<const double> x, const ParameterVector& w) {
  oracle::Vec3 n(model.initial_vector().coords()(0), model.initial_vector().coords()(1),
                 model.initial_vector().coords()(2));
  std::size_t k = 0;
  for (const auto& unit : model.units()) {
    for (const auto& s : unit.encoding.steps) {
      n = oracle::rodrigues(n, oracle::Vec3(s.axis(0), s.axis(1), s.axis(2)), x[s.feature_index]);
    }
    for (const auto& a : unit.variational.axes) {
      n = oracle::rodrigues(n, oracle::Vec3(a(0), a(1), a(2)), w[k++]);
    }
  }
  return -n(2);
}

double oracle_loss(const LearningModel& model, const Dataset& data, const ParameterVector& w) {
  double sum = 0.0;
  for (const auto& s : data.samples) {
    const double t = s.label == 1 ? 1.0 : -1.0;
    sum += std::pow(oracle_prediction(model, s.features, w) - t, 2);
  }
  return sum;
}

ParameterVector random_weights(std::mt19937_64& rng, std::size_t m) {
  std::uniform_real_distribution<double> u(-pi, pi);
  std::vector<double> w(m);
  for (auto& v : w) v = u(rng);
  return ParameterVector(w);
}

TEST(BuildTrack, CaseOneHasTwelveSteps) {
  const LearningModel model = case1_model();
  const std::vector<double> x{0.7};
  const RotationTrack track = build_track(model, x, case1_reference_weights());
  ASSERT_EQ(track.size(), 12u);
  for (std::size_t i : {0u, 4u, 8u}) {
    EXPECT_EQ(track.steps[i].axis, kX);
    EXPECT_EQ(track.steps[i].angle, 0.7);
  }
  const ParameterVector w = case1_reference_weights();
  EXPECT_EQ(track.steps[1].angle, w[0]);
  EXPECT_EQ(track.steps[11].angle, w[8]);
}

TEST(BuildTrack, SingleUnitFigureExample) {
  const LearningModel model =
      qubit_model(kZ, {LearningUnit{EncodingBlock{{{kY, 0}}}, VariationalBlock{{kZ, kX}}}}, 1);
  const std::vector<double> x{pi / 3};
  const RotationTrack track = build_track(model, x, ParameterVector({pi / 2, pi / 6}));
  ASSERT_EQ(track.size(), 3u);
  EXPECT_EQ(track.steps[0].axis, kY);
  EXPECT_EQ(track.steps[0].angle, pi / 3);
  EXPECT_EQ(track.steps[1].axis, kZ);
  EXPECT_EQ(track.steps[1].angle, pi / 2);
  EXPECT_EQ(track.steps[2].axis, kX);
  EXPECT_EQ(track.steps[2].angle, pi / 6);
}

TEST(BuildTrack, ZeroUnitModelIsEmpty) {
  const LearningModel model = qubit_model(-kZ, {}, 1);
  const std::vector<double> x{0.4};
  EXPECT_TRUE(build_track(model, x, ParameterVector{}).empty());
  EXPECT_EQ(predict_ideal(model, x, ParameterVector{}), 1.0);
  const AdiabaticPrediction p = predict_adiabatic(model, x, ParameterVector{}, Schedule{});
  EXPECT_EQ(p.value, 1.0);
  EXPECT_EQ(p.trace.samples.size(), 1u);
}

TEST(BuildTrack, CaseTwoEncodesZThenY) {
  const LearningModel model = case2_model();
  const std::vector<double> x{0.3, -0.6};
  const RotationTrack track = build_track(model, x, case2_reference_weights());
  ASSERT_EQ(track.size(), 15u);
  EXPECT_EQ(track.steps[0].axis, kZ);
  EXPECT_EQ(track.steps[0].angle, 0.3);
  EXPECT_EQ(track.steps[1].axis, kY);
  EXPECT_EQ(track.steps[1].angle, -0.6);
}

TEST(BuildTrack, LengthMismatchesAreShapeErrors) {
  const LearningModel model = case1_model();
  const std::vector<double> x{0.1};
  const std::vector<double> two{0.1, 0.2};
  expect_error(ErrorKind::kShape, [&] { build_track(model, two, case1_reference_weights()); });
  expect_error(ErrorKind::kShape, [&] { build_track(model, x, ParameterVector::zeros(8)); });
}

TEST(BuildTrack, WeightsAreNotSharedAcrossUnits) {
  const LearningModel model = case1_model();
  const std::vector<double> x{0.4};
  const ParameterVector w = case1_reference_weights();
  std::vector<double> swapped = w.vector();
  std::swap(swapped[0], swapped[3]);
  const RotationTrack a = build_track(model, x, w);
  const RotationTrack b = build_track(model, x, ParameterVector(swapped));
  EXPECT_NE(a.steps[1].angle, b.steps[1].angle);
  EXPECT_NE(predict_ideal(model, x, w), predict_ideal(model, x, ParameterVector(swapped)));
}

TEST(LearningModel, Validation) {
  const LearningUnit ok{EncodingBlock{{{kX, 0}}}, VariationalBlock{{kZ}}};
  expect_error(ErrorKind::kInvalidInput, [&] {
    qubit_model(-kZ, {ok, LearningUnit{EncodingBlock{{{kY, 0}}}, VariationalBlock{{kZ}}}}, 1);
  });
  expect_error(ErrorKind::kInvalidInput,
               [&] { qubit_model(-kZ, {LearningUnit{EncodingBlock{{{kX, 0}}}, VariationalBlock{}}}, 1); });
  expect_error(ErrorKind::kInvalidInput,
               [&] { qubit_model(-kZ, {LearningUnit{EncodingBlock{{{kX, 1}}}, VariationalBlock{{kZ}}}}, 1); });
  expect_error(ErrorKind::kShape, [&] {
    qubit_model(-kZ, {LearningUnit{EncodingBlock{{{RealVector::Unit(8, 0), 0}}}, VariationalBlock{{kZ}}}}, 1);
  });
  EXPECT_EQ(qubit_model(-kZ, {ok, ok}, 1).parameter_count(), 2u);
}

TEST(PredictIdeal, ZOnlyModelStaysUp) {
  const LearningModel model = qubit_model(-kZ, {LearningUnit{EncodingBlock{}, VariationalBlock{{kZ}}}}, 0);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    EXPECT_NEAR(predict_ideal(model, {}, random_weights(rng, 1)), 1.0, 1e-15);
  }
}

TEST(PredictIdeal, CaseOneReferenceWeights) {
  const LearningModel model = case1_model();
  const ParameterVector w = case1_reference_weights();
  const std::vector<double> far{0.9}, centre{0.0};
  EXPECT_GT(predict_ideal(model, far, w), 0.0);
  EXPECT_LE(predict_ideal(model, centre, w), 0.0);
}

TEST(PredictIdeal, MatchesBlochRotationOracle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (TaskId task : {TaskId::kCase1, TaskId::kCase2}) {
    const LearningModel model = task_model(task, 3);
    for (int t = 0; t < 200; ++t) {
      const ParameterVector w = random_weights(rng, model.parameter_count());
      std::vector<double> x(static_cast<std::size_t>(model.input_dimension()));
      for (auto& v : x) v = u(rng);
      const double p = predict_ideal(model, x, w);
      EXPECT_NEAR(p, oracle_prediction(model, x, w), 1e-12);
      EXPECT_LE(std::abs(p), 1.0 + 1e-10);
    }
  }
}

TEST(PredictAdiabatic, ConvergesToIdealAtLargeG) {
  const LearningModel model = case1_model();
  const ParameterVector w = case1_reference_weights();
  const std::vector<double> x{0.0};
  Schedule s;
  s.g = 200.0;
  EXPECT_LE(std::abs(predict_adiabatic(model, x, w, s).value - predict_ideal(model, x, w)), 1e-3);
}

TEST(PredictAdiabatic, CaseOneGridWithinFiveHundredthsAtG20) {
  const LearningModel model = case1_model();
  const ParameterVector w = case1_reference_weights();
  const Dataset grid = gen_case1(100, SamplingMode::kGrid, 0);
  double worst = 0.0;
  for (const auto& s : grid.samples) {
    worst = std::max(worst, std::abs(predict_adiabatic(model, s.features, w, Schedule{}).value -
                                     predict_ideal(model, s.features, w)));
  }
  EXPECT_LE(worst, 0.05);
}

TEST(Classify, BoundaryBelongsToLabelZero) {
  EXPECT_EQ(classify(-1.0), 0);
  EXPECT_EQ(classify(0.0), 0);
  EXPECT_EQ(classify(-0.0), 0);
  EXPECT_EQ(classify(0.5), 1);
  EXPECT_EQ(classify(1e-300), 1);
}

TEST(Loss, Examples) {
  const LearningModel model = qubit_model(-kZ, {LearningUnit{EncodingBlock{}, VariationalBlock{{kY}}}}, 0);
  // prediction cos(w): w = 0 → +1 (label 1), w = π → −1 (label 0), w = π/2 → 0
  Dataset one{{Sample{{}, 1}}, "test"};
  EXPECT_NEAR(loss(model, one, ParameterVector({0.0})), 0.0, 1e-15);
  EXPECT_NEAR(loss(model, one, ParameterVector({pi / 2})), 1.0, 1e-15);
  Dataset zero{{Sample{{}, 0}}, "test"};
  EXPECT_NEAR(loss(model, zero, ParameterVector({pi})), 0.0, 1e-15);
  expect_error(ErrorKind::kInvalidInput, [&] { loss(model, Dataset{}, ParameterVector({0.0})); });
}

TEST(Loss, CaseTwoReferenceBaseline) {
  const LearningModel model = case2_model();
  const ParameterVector w = case2_reference_weights();
  const Dataset data = gen_case2(200, 0);
  const double value = loss(model, data, w);
  EXPECT_NEAR(value, oracle_loss(model, data, w), 1e-9);
  EXPECT_NEAR(value, 73.761495180728787, 1e-9);
  EXPECT_GE(training_accuracy(model, data, w), 0.9);
}

TEST(Train, RejectsBadConfiguration) {
  const LearningModel model = case1_model();
  const Dataset data = gen_case1(10, SamplingMode::kRandom, 0);
  TrainerConfig c;
  c.max_evaluations = 0;
  expect_error(ErrorKind::kConfiguration, [&] { train(model, data, c); });
  expect_error(ErrorKind::kInvalidInput, [&] { train(model, Dataset{}, TrainerConfig{}); });
}

TEST(Train, DegenerateTargetsConverge) {
  const LearningModel model = case1_model();
  Dataset data = gen_case1(10, SamplingMode::kRandom, 1);
  for (auto& s : data.samples) s.label = 1;
  TrainerConfig c;
  c.max_evaluations = 500;
  const TrainResult r = train(model, data, c);
  EXPECT_GE(r.report.final_loss, 0.0);
  EXPECT_LE(r.report.final_loss, r.report.initial_loss);
  EXPECT_NEAR(r.report.final_loss, loss(model, data, r.weights), 1e-12);
}

TEST(Train, NeverWorseThanStart) {
  const LearningModel model = case1_model();
  const Dataset data = gen_case1(20, SamplingMode::kRandom, 4);
  for (TrainerMethod method : {TrainerMethod::kCobyla, TrainerMethod::kNelderMead}) {
    TrainerConfig c;
    c.method = method;
    c.initial = case1_reference_weights();
    c.max_evaluations = 300;
    c.restarts = 2;
    const TrainResult r = train(model, data, c);
    EXPECT_LE(loss(model, data, r.weights), loss(model, data, case1_reference_weights()));
    EXPECT_LE(r.report.evaluations, 300);
    ASSERT_FALSE(r.report.loss_curve.empty());
    for (std::size_t i = 1; i < r.report.loss_curve.size(); ++i) {
      EXPECT_LE(r.report.loss_curve[i], r.report.loss_curve[i - 1]);
    }
  }
}

TEST(Train, DeterministicForSeed) {
  const LearningModel model = case1_model();
  const Dataset data = gen_case1(20, SamplingMode::kRandom, 5);
  TrainerConfig c;
  c.max_evaluations = 400;
  c.restarts = 2;
  c.seed = 9;
  const TrainResult a = train(model, data, c);
  const TrainResult b = train(model, data, c);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.report.loss_curve, b.report.loss_curve);
}

TEST(Train, CaseOneFromZeros) {
  const LearningModel model = case1_model();
  const Dataset data = gen_case1(20, SamplingMode::kRandom, 0);
  TrainerConfig c;
  c.max_evaluations = 2000;
  const TrainResult r = train(model, data, c);
  EXPECT_EQ(r.weights.size(), 9u);
  EXPECT_GE(r.report.training_accuracy, 0.90);
  EXPECT_TRUE(r.report.improved);
}

TEST(Train, CaseTwoFromZeros) {
  const LearningModel model = case2_model();
  const Dataset data = gen_case2(200, 0);
  TrainerConfig c;
  c.max_evaluations = 5000;
  const TrainResult r = train(model, data, c);
  EXPECT_GE(r.report.training_accuracy, 0.85);
}

TEST(ParameterShift, SingleYRotation) {
  const LearningModel model = qubit_model(-kZ, {LearningUnit{EncodingBlock{}, VariationalBlock{{kY}}}}, 0);
  for (double w : {-2.0, -0.3, 0.0, 0.7, 2.9}) {
    EXPECT_NEAR(predict_ideal(model, {}, ParameterVector({w})), std::cos(w), 1e-14);
    EXPECT_NEAR(parameter_shift_gradient(model, {}, ParameterVector({w}), 0), -std::sin(w), 1e-14);
  }
}

TEST(ParameterShift, ZOnlyModelHasZeroGradient) {
  const LearningModel model =
      qubit_model(-kZ, {LearningUnit{EncodingBlock{}, VariationalBlock{{kZ, kZ}}}}, 0);
  std::mt19937_64 rng(5);
  const ParameterVector w = random_weights(rng, 2);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(parameter_shift_gradient(model, {}, w, i), 0.0, 1e-15);
}

double central_difference(const LearningModel& model, std::span<const double> x, ParameterVector w,
                          std::size_t i, double h) {
  const double w0 = w[i];
  w[i] = w0 + h;
  const double up = predict_ideal(model, x, w);
  w[i] = w0 - h;
  const double down = predict_ideal(model, x, w);
  return (up - down) / (2 * h);
}

TEST(ParameterShift, CaseOneMatchesFiniteDifferences) {
  const LearningModel model = case1_model();
  const ParameterVector w = case1_reference_weights();
  for (double x0 : {-0.7, 0.0, 0.4}) {
    const std::vector<double> x{x0};
    for (std::size_t i = 0; i < w.size(); ++i) {
      EXPECT_NEAR(parameter_shift_gradient(model, x, w, i), central_difference(model, x, w, i, 1e-5), 1e-6);
    }
  }
}

TEST(ParameterShift, RandomQubitModelsMatchFiniteDifferences) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 30; ++t) {
    const EncodingBlock enc{{{oracle::random_unit(rng, 3), 0}}};
    std::vector<LearningUnit> units;
    const int n_units = count(rng);
    for (int k = 0; k < n_units; ++k) {
      VariationalBlock v;
      for (int j = count(rng); j > 0; --j) v.axes.push_back(oracle::random_unit(rng, 3));
      units.push_back({enc, v});
    }
    const LearningModel model = qubit_model(oracle::random_unit(rng, 3), units, 1);
    const ParameterVector w = random_weights(rng, model.parameter_count());
    const std::vector<double> x{u(rng)};
    for (std::size_t i = 0; i < w.size(); ++i) {
      EXPECT_NEAR(parameter_shift_gradient(model, x, w, i), central_difference(model, x, w, i, 1e-5), 1e-6);
    }
  }
}

TEST(ParameterShift, QutritIsUnsupported) {
  const BasisHandle b = build_su_basis(3);
  const LearningModel model(HamiltonianVector(b, RealVector::Unit(8, 2)),
                            {LearningUnit{EncodingBlock{}, VariationalBlock{{RealVector::Unit(8, 0)}}}},
                            b->generator(2), 0);
  expect_error(ErrorKind::kUnsupportedDimension,
               [&] { parameter_shift_gradient(model, {}, ParameterVector({0.1}), 0); });
  expect_error(ErrorKind::kShape,
               [&] { parameter_shift_gradient(case1_model(), std::vector<double>{0.1}, case1_reference_weights(), 9); });
}

}  // namespace
}  // namespace aql
