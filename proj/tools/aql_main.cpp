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

// aql: train / evaluate / trace / verify front end.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 optimizer stall. Log verbosity comes from AQL_LOG_LEVEL
// (trace|debug|info|warn|error|off, default warn); logs go to stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "aql/commands.hpp"
#include "aql/config.hpp"
#include "aql/error.hpp"

namespace {

struct Overrides {
  std::string config;
  std::string task;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<double> g;
  std::optional<double> dtheta;
  std::string weights;
  std::vector<double> x;
};

void add_experiment_flags(CLI::App* cmd, Overrides& o) {
  auto* config = cmd->add_option("--config", o.config, "INI experiment file")->check(CLI::ExistingFile);
  cmd->add_option("--task", o.task, "case1|case2 defaults when no config is given")->excludes(config);
  cmd->add_option("--out", o.out, "output directory (overrides output.dir)");
  cmd->add_option("--seed", o.seed, "run seed (overrides run.seed)");
  cmd->add_option("--g", o.g, "time per radian of rotation");
  cmd->add_option("--dtheta", o.dtheta, "angular sub-step in radians");
  cmd->add_option("--weights", o.weights, "weights.csv path, or 'reference' for the published weights");
}

aql::ExperimentConfig resolve(const Overrides& o) {
  aql::ExperimentConfig c = o.config.empty()
                                ? aql::default_config(o.task.empty() ? aql::TaskId::kCase1
                                                                     : aql::parse_task(o.task))
                                : aql::load_config(o.config);
  if (!o.out.empty()) c.output_dir = o.out;
  if (o.seed) c.seed = *o.seed;
  if (o.g) c.schedule.g = *o.g;
  if (o.dtheta) c.schedule.dtheta = *o.dtheta;
  if (o.weights == "reference") {
    c.weights = c.task == aql::TaskId::kCase1 ? aql::case1_reference_weights()
                                              : aql::case2_reference_weights();
  } else if (!o.weights.empty()) {
    c.weights = aql::read_weights_csv(o.weights);
  }
  if (!o.x.empty()) c.trace_x = o.x;
  return c;
}

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("aql");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("AQL_LOG_LEVEL")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"Adiabatic quantum learning simulator"};
  app.require_subcommand(1);

  Overrides train_o, eval_o, trace_o;
  auto* train = app.add_subcommand("train", "fit weights on the seeded training set");
  add_experiment_flags(train, train_o);
  auto* evaluate = app.add_subcommand("evaluate", "score weights on the test set");
  add_experiment_flags(evaluate, eval_o);
  auto* trace = app.add_subcommand("trace", "record one adiabatic run");
  add_experiment_flags(trace, trace_o);
  trace->add_option("--x", trace_o.x, "input features (overrides trace.x)")->delimiter(',');

  int dim = 2;
  int trials = 1000;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "check the algebraic invariants");
  verify->add_option("--dim", dim, "Hilbert-space dimension D (2, 3 or 4)");
  verify->add_option("--trials", trials, "random (n, m, theta) triples");
  verify->add_option("--seed", verify_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return aql::kExitInvalidInput;
  }

  if (*verify) return aql::cmd_verify(dim, trials, verify_seed, std::cout, std::cerr);

  const Overrides& o = *train ? train_o : *evaluate ? eval_o : trace_o;
  aql::ExperimentConfig config;
  try {
    config = resolve(o);
  } catch (const aql::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return aql::kExitInvalidInput;
  }
  if (*train) return aql::cmd_train(config, std::cout, std::cerr);
  if (*evaluate) return aql::cmd_evaluate(config, std::cout, std::cerr);
  return aql::cmd_trace(config, std::cout, std::cerr);
}
