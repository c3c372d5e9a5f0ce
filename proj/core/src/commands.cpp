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

#include "aql/commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <spdlog/spdlog.h>

#include "aql/dataset.hpp"
#include "aql/error.hpp"
#include "aql/verify.hpp"

namespace aql {
namespace {

namespace fs = std::filesystem;

using Summary = std::vector<std::pair<std::string, std::string>>;

// Shortest round-trip form; -0 prints as 0.
std::string num(double v) { return fmt::format("{}", v == 0.0 ? 0.0 : v); }

// Largest boundary distance still counted as "near" in evaluation summaries.
double near_boundary_distance(TaskId task) { return task == TaskId::kCase1 ? 0.15 : 0.1; }

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorKind::kIo, fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
  std::ofstream file(dir / name, std::ios::binary);
  if (!file) fail(ErrorKind::kIo, fmt::format("cannot write '{}'", (dir / name).string()));
  return file;
}

void write_summary(const fs::path& dir, const std::string& name, const Summary& summary) {
  std::ofstream file = open_output(dir, name);
  file << "key,value\n";
  for (const auto& [k, v] : summary) file << k << ',' << v << '\n';
}

void write_dataset(const fs::path& dir, const std::string& name, const Dataset& data) {
  std::ofstream file = open_output(dir, name);
  write_dataset_csv(file, data);
}

std::string feature_header(int count) {
  std::string out;
  for (int i = 1; i <= count; ++i) out += fmt::format("x{},", i);
  return out;
}

std::string feature_row(const Sample& s) {
  std::string out;
  for (double f : s.features) out += num(f) + ",";
  return out;
}

Dataset training_set(const ExperimentConfig& c) {
  return c.task == TaskId::kCase1 ? gen_case1(c.train_size, c.train_mode, c.train_seed())
                                  : gen_case2(c.train_size, c.train_seed());
}

Dataset test_set(const ExperimentConfig& c) {
  return c.task == TaskId::kCase1 ? gen_case1(c.test_size, c.test_mode, c.test_seed())
                                  : gen_case2(c.test_size, c.test_seed());
}

// Maps library failures onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    fmt::print(err, "internal error: {}\n", e.what());
    return kExitInternal;
  }
}

}  // namespace

int cmd_train(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const LearningModel model = task_model(config.task, config.units);
    const Dataset data = training_set(config);

    TrainerConfig tc;
    tc.method = config.method;
    tc.initial = config.weights;
    tc.max_evaluations = config.budget;
    tc.tolerance = config.tolerance;
    tc.initial_step = config.initial_step;
    tc.seed = config.trainer_seed();
    tc.restarts = config.restarts;

    spdlog::info("training {} on {} samples ({}, budget {})", to_string(config.task), data.size(),
                 to_string(config.method), config.budget);
    const TrainResult result = train(model, data, tc);
    const TrainReport& r = result.report;

    const fs::path& dir = config.output_dir;
    {
      std::ofstream file = open_output(dir, "weights.csv");
      write_weights_csv(file, result.weights);
    }
    {
      std::ofstream file = open_output(dir, "loss_curve.csv");
      file << "evaluation,loss\n";
      for (std::size_t i = 0; i < r.loss_curve.size(); ++i) {
        file << fmt::format("{},{}\n", i + 1, num(r.loss_curve[i]));
      }
    }
    write_dataset(dir, "train_data.csv", data);
    write_summary(dir, "train_summary.csv",
                  {{"task", std::string(to_string(config.task))},
                   {"method", std::string(to_string(config.method))},
                   {"samples", std::to_string(data.size())},
                   {"parameters", std::to_string(result.weights.size())},
                   {"evaluations", std::to_string(r.evaluations)},
                   {"starts", std::to_string(r.starts)},
                   {"initial_loss", num(r.initial_loss)},
                   {"final_loss", num(r.final_loss)},
                   {"training_accuracy", num(r.training_accuracy)},
                   {"improved", r.improved ? "true" : "false"}});

    fmt::print(out, "train {}: loss {:.6g} -> {:.6g}, training accuracy {:.4f} ({} evaluations)\n",
               to_string(config.task), r.initial_loss, r.final_loss, r.training_accuracy,
               r.evaluations);
    if (!r.improved) {
      fmt::print(err, "optimizer did not improve on the starting point\n");
      return kExitOptimizerStall;
    }
    return kExitOk;
  });
}

int cmd_evaluate(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ExperimentConfig c = config;
    if (!c.weights) {
      const fs::path trained = c.output_dir / "weights.csv";
      if (!fs::exists(trained)) {
        fail(ErrorKind::kConfiguration,
             fmt::format("no weights: set model.weights, pass --weights or train into '{}'",
                         c.output_dir.string()));
      }
      c.weights = read_weights_csv(trained);
    }
    validate(c);
    const LearningModel model = task_model(c.task, c.units);
    const Dataset data = test_set(c);

    spdlog::info("evaluating {} on {} samples (g = {}, dtheta = {})", to_string(c.task),
                 data.size(), c.schedule.g, c.schedule.dtheta);
    const auto rows = predict_dataset(model, *c.weights, data, Predictor::kAdiabatic, c.schedule);
    const AccuracyResult acc = summarize(rows);

    int ideal_correct = 0;
    double max_gap = 0.0;
    for (const auto& row : rows) {
      ideal_correct += classify(row.ideal) == row.sample.label;
      max_gap = std::max(max_gap, std::abs(*row.adiabatic - row.ideal));
    }

    const fs::path& dir = c.output_dir;
    const int nf = data.feature_count();
    {
      std::ofstream file = open_output(dir, "predictions.csv");
      file << feature_header(nf) << "label,ideal,adiabatic,predicted,correct\n";
      for (const auto& row : rows) {
        file << feature_row(row.sample)
             << fmt::format("{},{},{},{},{}\n", row.sample.label, num(row.ideal),
                            num(*row.adiabatic), row.predicted, row.correct ? 1 : 0);
      }
    }
    const double near = near_boundary_distance(c.task);
    int near_count = 0;
    double farthest = 0.0;
    {
      std::ofstream file = open_output(dir, "misclassified.csv");
      file << feature_header(nf) << "label,boundary_distance\n";
      for (const auto& s : acc.misclassified) {
        const double d = boundary_distance(c.task, s);
        near_count += d <= near;
        farthest = std::max(farthest, d);
        file << feature_row(s) << fmt::format("{},{}\n", s.label, num(d));
      }
    }
    write_dataset(dir, "test_data.csv", data);
    const double n = static_cast<double>(rows.size());
    write_summary(dir, "evaluate_summary.csv",
                  {{"task", std::string(to_string(c.task))},
                   {"samples", std::to_string(rows.size())},
                   {"g", num(c.schedule.g)},
                   {"dtheta", num(c.schedule.dtheta)},
                   {"accuracy", num(acc.accuracy)},
                   {"ideal_accuracy", num(ideal_correct / n)},
                   {"max_abs_difference", num(max_gap)},
                   {"misclassified", std::to_string(acc.misclassified.size())},
                   {"near_boundary_distance", num(near)},
                   {"misclassified_near_boundary", std::to_string(near_count)},
                   {"misclassified_max_boundary_distance", num(farthest)}});

    fmt::print(out, "evaluate {}: adiabatic accuracy {:.4f}, ideal accuracy {:.4f}, {} misclassified\n",
               to_string(c.task), acc.accuracy, ideal_correct / n, acc.misclassified.size());
    return kExitOk;
  });
}

int cmd_trace(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ExperimentConfig c = config;
    if (!c.weights) {
      const fs::path trained = c.output_dir / "weights.csv";
      if (!fs::exists(trained)) {
        fail(ErrorKind::kConfiguration, "no weights: set model.weights, pass --weights or train first");
      }
      c.weights = read_weights_csv(trained);
    }
    validate(c);
    const LearningModel model = task_model(c.task, c.units);
    const AdiabaticPrediction run = predict_adiabatic(model, c.trace_x, *c.weights, c.schedule);
    const double ideal = predict_ideal(model, c.trace_x, *c.weights);

    const fs::path& dir = c.output_dir;
    const auto d = static_cast<int>(model.basis().size());
    {
      std::ofstream file = open_output(dir, "trace.csv");
      file << "t,fidelity,expectation";
      for (int a = 1; a <= d; ++a) file << ",n" << a;
      file << '\n';
      for (const auto& s : run.trace.samples) {
        file << fmt::format("{},{},{}", num(s.time), num(s.fidelity), num(s.expectation));
        for (int a = 0; a < d; ++a) file << ',' << num(s.coords[a]);
        file << '\n';
      }
    }
    std::string x;
    for (std::size_t i = 0; i < c.trace_x.size(); ++i) x += (i ? ";" : "") + num(c.trace_x[i]);
    write_summary(dir, "trace_summary.csv",
                  {{"task", std::string(to_string(c.task))},
                   {"x", x},
                   {"g", num(c.schedule.g)},
                   {"dtheta", num(c.schedule.dtheta)},
                   {"samples", std::to_string(run.trace.samples.size())},
                   {"duration", num(run.trace.duration())},
                   {"min_fidelity", num(run.trace.min_fidelity())},
                   {"final_fidelity", num(run.trace.samples.back().fidelity)},
                   {"adiabatic_expectation", num(run.value)},
                   {"ideal_expectation", num(ideal)},
                   {"abs_difference", num(std::abs(run.value - ideal))}});

    fmt::print(out, "trace {}: {} samples over t = {:.6g}, min fidelity {:.6f}, <O> {:.6f} (ideal {:.6f})\n",
               to_string(c.task), run.trace.samples.size(), run.trace.duration(),
               run.trace.min_fidelity(), run.value, ideal);
    return kExitOk;
  });
}

int cmd_verify(int dim, int trials, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const VerifyReport report = run_verification(dim, trials, seed);
    fmt::print(out, "verify D={} trials={} seed={}\n", dim, trials, seed);
    for (const auto& check : report.checks) {
      fmt::print(out, "  {:<28} {:>10.3e}  (tol {:.0e})  {}\n", check.name, check.max_residual,
                 check.tolerance, check.passed() ? "ok" : "FAIL");
    }
    if (!report.passed()) {
      for (const auto& check : report.checks) {
        if (!check.passed()) fmt::print(err, "check failed: {}\n", check.name);
      }
      return kExitVerifyFailed;
    }
    return kExitOk;
  });
}

}  // namespace aql
