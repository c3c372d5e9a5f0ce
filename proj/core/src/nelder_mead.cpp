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

#include "aql/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "aql/error.hpp"

namespace aql {

NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  require(n >= 1, ErrorKind::kConfiguration, "Nelder-Mead needs at least one variable");
  require(options.max_evaluations >= 1, ErrorKind::kConfiguration,
          "evaluation budget must be at least 1");
  require(options.initial_step > 0.0, ErrorKind::kConfiguration, "initial step must be positive");

  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::max() : v;
  };
  auto budget_left = [&] { return result.evaluations < options.max_evaluations; };

  std::vector<std::vector<double>> simplex{x0};
  std::vector<double> values{eval(x0)};
  for (std::size_t i = 0; i < n && budget_left(); ++i) {
    auto v = x0;
    v[i] += options.initial_step;
    values.push_back(eval(v));
    simplex.push_back(std::move(v));
  }

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    order.resize(simplex.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s;
    std::vector<double> v;
    for (auto i : order) {
      s.push_back(simplex[i]);
      v.push_back(values[i]);
    }
    simplex = std::move(s);
    values = std::move(v);
  };

  auto affine = [n](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  while (simplex.size() == n + 1 && budget_left()) {
    sort_simplex();
    double diameter = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        diameter = std::max(diameter, std::abs(simplex[j][i] - simplex[0][i]));
      }
    }
    if (values[n] - values[0] <= options.tolerance && diameter <= options.tolerance) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[j][i] / static_cast<double>(n);
    }

    const auto reflected = affine(centroid, simplex[n], -1.0);
    const double fr = eval(reflected);
    if (fr < values[0]) {
      if (!budget_left()) {
        simplex[n] = reflected;
        values[n] = fr;
        break;
      }
      const auto expanded = affine(centroid, simplex[n], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[n] = expanded;
        values[n] = fe;
      } else {
        simplex[n] = reflected;
        values[n] = fr;
      }
    } else if (fr < values[n - 1]) {
      simplex[n] = reflected;
      values[n] = fr;
    } else {
      if (!budget_left()) break;
      const bool outside = fr < values[n];
      const auto contracted = outside ? affine(centroid, reflected, 0.5)
                                      : affine(centroid, simplex[n], 0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, values[n])) {
        simplex[n] = contracted;
        values[n] = fc;
      } else {
        for (std::size_t j = 1; j <= n && budget_left(); ++j) {
          simplex[j] = affine(simplex[0], simplex[j], 0.5);
          values[j] = eval(simplex[j]);
        }
      }
    }
  }

  const auto best = static_cast<std::size_t>(
      std::distance(values.begin(), std::min_element(values.begin(), values.end())));
  result.x = simplex[best];
  result.f = values[best];
  return result;
}

}  // namespace aql
