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

// Drives the installed-style `aql` executable and checks the exit-code
// contract and byte-for-byte reproducibility of its output files.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

const fs::path& root() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / ("aql_cli_test_" + std::to_string(getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string(AQL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = root() / name;
  std::ofstream(p) << text;
  return p;
}

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("evaluate --g notanumber"), 2);
  EXPECT_EQ(run("train --config /nonexistent.ini"), 2);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --dim 2 --trials 1000"), 0);
  EXPECT_EQ(run("verify --dim 3 --trials 1000"), 0);
  EXPECT_EQ(run("verify --dim 1"), 2);
  EXPECT_EQ(run("verify --dim 5"), 2);
}

TEST(Cli, InvalidConfigExitsTwo) {
  const fs::path bad = write_file("bad.ini", "[model]\nweights = 1, 2, 3\n");
  EXPECT_EQ(run("train --config " + bad.string() + " --out " + (root() / "bad").string()), 2);
  const fs::path typo = write_file("typo.ini", "[schedule]\ngg = 20\n");
  EXPECT_EQ(run("evaluate --config " + typo.string()), 2);
  EXPECT_EQ(run("evaluate --out " + (root() / "nothing").string()), 2);
  EXPECT_EQ(run("evaluate --weights reference --dtheta 0.5 --out " + (root() / "x").string()), 2);
}

TEST(Cli, EvaluateAndTraceWithReferenceWeights) {
  const fs::path out = root() / "ref";
  EXPECT_EQ(run("evaluate --weights reference --out " + out.string()), 0);
  EXPECT_TRUE(fs::exists(out / "evaluate_summary.csv"));
  EXPECT_EQ(run("trace --weights reference --x 0.25 --g 5 --out " + out.string()), 0);
  EXPECT_NE(slurp(out / "trace_summary.csv").find("x,0.25\n"), std::string::npos);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const fs::path ini = write_file("det.ini", "[task]\nname = case1\n[run]\nseed = 3\n[trainer]\nrestarts = 1\n");
  for (const char* tag : {"a", "b"}) {
    const std::string out = (root() / tag).string();
    ASSERT_EQ(run("train --config " + ini.string() + " --out " + out), 0);
    ASSERT_EQ(run("evaluate --config " + ini.string() + " --out " + out), 0);
    ASSERT_EQ(run("trace --config " + ini.string() + " --out " + out), 0);
  }
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(root() / "a")) {
    const fs::path other = root() / "b" / entry.path().filename();
    ASSERT_TRUE(fs::exists(other)) << other;
    EXPECT_EQ(slurp(entry.path()), slurp(other)) << entry.path().filename();
    ++compared;
  }
  EXPECT_GE(compared, 10);
}

}  // namespace
