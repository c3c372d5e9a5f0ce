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

#include "aql/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "aql/error.hpp"

namespace aql {
namespace {

namespace pt = boost::property_tree;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::string_view key,
               ErrorKind kind = ErrorKind::kConfiguration) {
  const std::string_view s = trim(text);
  T value{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    fail(kind, fmt::format("{}: cannot parse '{}' as a number", key, text));
  }
  return value;
}

std::vector<double> parse_list(std::string_view text, std::string_view key) {
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_number<double>(rest.substr(0, comma), key));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += fmt::format("{}", values[i]);
  }
  return out;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"task", {"name", "units"}},
      {"schedule", {"g", "dtheta", "stride"}},
      {"trainer", {"method", "budget", "tolerance", "initial_step", "restarts"}},
      {"run", {"seed"}},
      {"data", {"train_size", "train_mode", "test_size", "test_mode"}},
      {"model", {"weights"}},
      {"trace", {"x"}},
      {"output", {"dir"}},
  };
  return keys;
}

void apply(ExperimentConfig& c, const std::string& section, const std::string& key,
           const std::string& value) {
  const std::string where = section + "." + key;
  if (section == "task") {
    if (key == "units") c.units = parse_number<int>(value, where);
    // name was consumed before defaults were chosen
  } else if (section == "schedule") {
    if (key == "g") c.schedule.g = parse_number<double>(value, where);
    if (key == "dtheta") c.schedule.dtheta = parse_number<double>(value, where);
    if (key == "stride") c.schedule.sample_stride = parse_number<int>(value, where);
  } else if (section == "trainer") {
    if (key == "method") c.method = parse_trainer_method(trim(value));
    if (key == "budget") c.budget = parse_number<int>(value, where);
    if (key == "tolerance") c.tolerance = parse_number<double>(value, where);
    if (key == "initial_step") c.initial_step = parse_number<double>(value, where);
    if (key == "restarts") c.restarts = parse_number<int>(value, where);
  } else if (section == "run") {
    c.seed = parse_number<std::uint64_t>(value, where);
  } else if (section == "data") {
    if (key == "train_size") c.train_size = parse_number<int>(value, where);
    if (key == "train_mode") c.train_mode = parse_sampling_mode(trim(value));
    if (key == "test_size") c.test_size = parse_number<int>(value, where);
    if (key == "test_mode") c.test_mode = parse_sampling_mode(trim(value));
  } else if (section == "model") {
    if (trim(value) == "reference") {
      c.weights = c.task == TaskId::kCase1 ? case1_reference_weights() : case2_reference_weights();
    } else if (!trim(value).empty()) {
      c.weights = ParameterVector(parse_list(value, where));
    }
  } else if (section == "trace") {
    c.trace_x = parse_list(value, where);
  } else if (section == "output") {
    c.output_dir = std::string(trim(value));
  }
}

}  // namespace

std::string_view to_string(TrainerMethod method) {
  return method == TrainerMethod::kCobyla ? "cobyla" : "nelder-mead";
}

TrainerMethod parse_trainer_method(std::string_view name) {
  if (name == "cobyla") return TrainerMethod::kCobyla;
  if (name == "nelder-mead") return TrainerMethod::kNelderMead;
  fail(ErrorKind::kConfiguration,
       fmt::format("unknown trainer method '{}' (expected cobyla|nelder-mead)", name));
}

ExperimentConfig default_config(TaskId task) {
  ExperimentConfig c;
  c.task = task;
  if (task == TaskId::kCase1) {
    c.budget = 2000;
    c.train_size = 20;
    c.test_size = 100;
    c.test_mode = SamplingMode::kGrid;
    c.trace_x = {0.0};
  } else {
    c.budget = 5000;
    c.train_size = 200;
    c.test_size = 200;
    c.test_mode = SamplingMode::kRandom;
    c.trace_x = {0.0, 0.0};
  }
  return c;
}

ExperimentConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    fail(ErrorKind::kConfiguration, fmt::format("config line {}: {}", e.line(), e.message()));
  }

  const auto name = tree.get_optional<std::string>("task.name");
  ExperimentConfig c = default_config(name ? parse_task(trim(*name)) : TaskId::kCase1);

  const auto& keys = known_keys();
  for (const auto& [section, entries] : tree) {
    const auto allowed = keys.find(section);
    if (allowed == keys.end()) {
      fail(ErrorKind::kConfiguration, fmt::format("unknown config section [{}]", section));
    }
    if (entries.empty() && !entries.data().empty()) {
      fail(ErrorKind::kConfiguration, fmt::format("key '{}' outside any section", section));
    }
    for (const auto& [key, node] : entries) {
      if (!allowed->second.contains(key)) {
        fail(ErrorKind::kConfiguration, fmt::format("unknown key '{}' in [{}]", key, section));
      }
      apply(c, section, key, node.data());
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, fmt::format("cannot open config '{}'", path.string()));
  return parse_config(in);
}

void validate(const ExperimentConfig& c) {
  auto check = [](bool ok, const std::string& what) { require(ok, ErrorKind::kConfiguration, what); };
  check(c.units >= 1, "task.units must be at least 1");
  c.schedule.validate();
  check(c.budget >= 1, "trainer.budget must be at least 1");
  check(c.tolerance > 0.0, "trainer.tolerance must be positive");
  check(c.initial_step > 0.0, "trainer.initial_step must be positive");
  check(c.restarts >= 0, "trainer.restarts must be non-negative");
  check(c.train_size >= 1, "data.train_size must be at least 1");
  check(c.test_size >= 1, "data.test_size must be at least 1");
  if (c.task == TaskId::kCase2) {
    check(c.train_mode == SamplingMode::kRandom && c.test_mode == SamplingMode::kRandom,
          "case2 supports random sampling only");
  }
  const std::size_t params = static_cast<std::size_t>(c.units) * 3;
  if (c.weights) {
    check(c.weights->size() == params,
          fmt::format("model.weights has {} values, the model needs {}", c.weights->size(), params));
  }
  const std::size_t inputs = c.task == TaskId::kCase1 ? 1 : 2;
  check(c.trace_x.size() == inputs,
        fmt::format("trace.x has {} values, the task takes {}", c.trace_x.size(), inputs));
  check(!c.output_dir.empty(), "output.dir must not be empty");
}

std::string write_config(const ExperimentConfig& c) {
  std::string out;
  out += fmt::format("[task]\nname = {}\nunits = {}\n\n", to_string(c.task), c.units);
  out += fmt::format("[schedule]\ng = {}\ndtheta = {}\nstride = {}\n\n", c.schedule.g,
                     c.schedule.dtheta, c.schedule.sample_stride);
  out += fmt::format(
      "[trainer]\nmethod = {}\nbudget = {}\ntolerance = {}\ninitial_step = {}\n"
      "restarts = {}\n\n",
      to_string(c.method), c.budget, c.tolerance, c.initial_step, c.restarts);
  out += fmt::format("[run]\nseed = {}\n\n", c.seed);
  out += fmt::format("[data]\ntrain_size = {}\ntrain_mode = {}\ntest_size = {}\ntest_mode = {}\n\n",
                     c.train_size, to_string(c.train_mode), c.test_size, to_string(c.test_mode));
  if (c.weights) out += fmt::format("[model]\nweights = {}\n\n", join(c.weights->values()));
  out += fmt::format("[trace]\nx = {}\n\n", join(c.trace_x));
  out += fmt::format("[output]\ndir = {}\n", c.output_dir.string());
  return out;
}

ParameterVector read_weights_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, fmt::format("cannot open weights '{}'", path.string()));
  std::string line;
  if (!std::getline(in, line) || trim(line) != "index,value") {
    fail(ErrorKind::kInvalidInput, fmt::format("{}: expected header 'index,value'", path.string()));
  }
  std::vector<double> values;
  while (std::getline(in, line)) {
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    const std::string where = fmt::format("{} row {}", path.string(), values.size() + 1);
    if (comma == std::string_view::npos) {
      fail(ErrorKind::kInvalidInput, where + ": expected 'index,value'");
    }
    const auto index = parse_number<std::size_t>(row.substr(0, comma), where, ErrorKind::kInvalidInput);
    if (index != values.size()) fail(ErrorKind::kInvalidInput, where + ": indices must run 0,1,2,...");
    values.push_back(parse_number<double>(row.substr(comma + 1), where, ErrorKind::kInvalidInput));
  }
  if (values.empty()) fail(ErrorKind::kInvalidInput, path.string() + ": no weights");
  return ParameterVector(std::move(values));
}

void write_weights_csv(std::ostream& out, const ParameterVector& w) {
  out << "index,value\n";
  for (std::size_t i = 0; i < w.size(); ++i) out << fmt::format("{},{}\n", i, w[i]);
}

}  // namespace aql
