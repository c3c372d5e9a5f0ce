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

// Known-solution problems from Powell's original COBYLA test set, plus
// textbook unconstrained functions for the simplex fallback.

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "aql/cobyla.hpp"
#include "aql/error.hpp"
#include "aql/nelder_mead.hpp"

namespace aql {
namespace {

using Span = std::span<const double>;

CobylaOptions tight(int budget = 5000) {
  CobylaOptions o;
  o.rhobeg = 0.5;
  o.rhoend = 1e-7;
  o.max_evaluations = budget;
  return o;
}

void expect_near(const std::vector<double>& x, const std::vector<double>& want, double tol) {
  ASSERT_EQ(x.size(), want.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_NEAR(x[i], want[i], tol) << "component " << i;
}

TEST(Cobyla, SimpleQuadratic) {
  CobylaProblem p;
  p.objective = [](Span x) { return 10 * std::pow(x[0] + 1, 2) + x[1] * x[1]; };
  const CobylaResult r = cobyla_minimize(p, {1.0, 1.0}, tight());
  EXPECT_EQ(r.status, CobylaStatus::kConverged);
  expect_near(r.x, {-1.0, 0.0}, 1e-5);
}

TEST(Cobyla, BilinearOnUnitDisc) {
  CobylaProblem p;
  p.objective = [](Span x) { return x[0] * x[1]; };
  p.constraint_count = 1;
  p.constraints = [](Span x, std::span<double> c) { c[0] = 1 - x[0] * x[0] - x[1] * x[1]; };
  const CobylaResult r = cobyla_minimize(p, {1.0, 1.0}, tight());
  const double h = std::sqrt(0.5);
  expect_near(r.x, {h, -h}, 1e-5);
  EXPECT_NEAR(r.f, -0.5, 1e-8);
  EXPECT_LE(r.max_violation, 1e-8);
}

TEST(Cobyla, TrilinearInEllipsoid) {
  CobylaProblem p;
  p.objective = [](Span x) { return x[0] * x[1] * x[2]; };
  p.constraint_count = 1;
  p.constraints = [](Span x, std::span<double> c) {
    c[0] = 1 - x[0] * x[0] - 2 * x[1] * x[1] - 3 * x[2] * x[2];
  };
  const CobylaResult r = cobyla_minimize(p, {1.0, 1.0, 1.0}, tight());
  expect_near(r.x, {1 / std::sqrt(3.0), 1 / std::sqrt(6.0), -1.0 / 3.0}, 1e-5);
}

TEST(Cobyla, IntermediateRosenbrock) {
  CobylaProblem p;
  p.objective = [](Span x) { return 10 * std::pow(x[0] * x[0] - x[1], 2) + std::pow(1 + x[0], 2); };
  const CobylaResult r = cobyla_minimize(p, {1.0, 1.0}, tight());
  expect_near(r.x, {-1.0, 1.0}, 1e-4);
}

TEST(Cobyla, FletcherTwoConstraints) {
  CobylaProblem p;
  p.objective = [](Span x) { return -x[0] - x[1]; };
  p.constraint_count = 2;
  p.constraints = [](Span x, std::span<double> c) {
    c[0] = x[1] - x[0] * x[0];
    c[1] = 1 - x[0] * x[0] - x[1] * x[1];
  };
  const CobylaResult r = cobyla_minimize(p, {1.0, 1.0}, tight());
  const double h = std::sqrt(0.5);
  expect_near(r.x, {h, h}, 1e-5);
}

TEST(Cobyla, FletcherQ12_3) {
  CobylaProblem p;
  p.objective = [](Span x) { return x[2]; };
  p.constraint_count = 3;
  p.constraints = [](Span x, std::span<double> c) {
    c[0] = 5 * x[0] - x[1] + x[2];
    c[1] = x[2] - x[0] * x[0] - x[1] * x[1] - 4 * x[1];
    c[2] = x[2] - 5 * x[0] - x[1];
  };
  const CobylaResult r = cobyla_minimize(p, {1.0, 1.0, 1.0}, tight());
  expect_near(r.x, {0.0, -3.0, -3.0}, 1e-5);
}

TEST(Cobyla, StopsAtBudget) {
  CobylaProblem p;
  int calls = 0;
  p.objective = [&](Span x) {
    ++calls;
    return 10 * std::pow(x[0] * x[0] - x[1], 2) + std::pow(1 + x[0], 2);
  };
  const CobylaResult r = cobyla_minimize(p, {1.0, 1.0}, tight(25));
  EXPECT_EQ(r.status, CobylaStatus::kMaxEvaluations);
  EXPECT_EQ(r.evaluations, 25);
  EXPECT_EQ(calls, 25);
}

TEST(Cobyla, ReturnsBestPointSeen) {
  CobylaProblem p;
  std::vector<double> seen;
  p.objective = [&](Span x) {
    const double f = std::pow(x[0] - 0.3, 2) + std::pow(x[1] + 0.2, 2) + std::sin(5 * x[0]);
    seen.push_back(f);
    return f;
  };
  const CobylaResult r = cobyla_minimize(p, {0.0, 0.0}, tight(40));
  double best = seen.front();
  for (double f : seen) best = std::min(best, f);
  EXPECT_EQ(r.f, best);
}

TEST(Cobyla, RejectsBadOptions) {
  CobylaProblem p;
  p.objective = [](Span x) { return x[0] * x[0]; };
  auto expect_config = [&](std::vector<double> x0, CobylaOptions o) {
    try {
      cobyla_minimize(p, std::move(x0), o);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kConfiguration);
    }
  };
  expect_config({}, CobylaOptions{});
  expect_config({1.0}, CobylaOptions{0.0, 1e-6, 100});
  expect_config({1.0}, CobylaOptions{0.1, 0.5, 100});
  expect_config({1.0}, CobylaOptions{0.5, 1e-6, 0});
}

TEST(NelderMead, Rosenbrock) {
  NelderMeadOptions o;
  o.max_evaluations = 5000;
  o.tolerance = 1e-12;
  const NelderMeadResult r = nelder_mead_minimize(
      [](Span x) { return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2); }, {-1.2, 1.0}, o);
  EXPECT_TRUE(r.converged);
  expect_near(r.x, {1.0, 1.0}, 1e-4);
}

TEST(NelderMead, ShiftedSphereInFourDimensions) {
  NelderMeadOptions o;
  o.max_evaluations = 5000;
  o.tolerance = 1e-12;
  const NelderMeadResult r = nelder_mead_minimize(
      [](Span x) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += std::pow(x[i] - static_cast<double>(i), 2);
        return s;
      },
      {0.0, 0.0, 0.0, 0.0}, o);
  expect_near(r.x, {0.0, 1.0, 2.0, 3.0}, 1e-5);
}

TEST(NelderMead, RespectsBudget) {
  NelderMeadOptions o;
  o.max_evaluations = 30;
  const NelderMeadResult r = nelder_mead_minimize(
      [](Span x) { return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2); }, {-1.2, 1.0}, o);
  EXPECT_LE(r.evaluations, 30);
  EXPECT_FALSE(r.converged);
}

}  // namespace
}  // namespace aql
