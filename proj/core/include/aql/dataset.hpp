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

#include <iosfwd>
#include <string>
#include <vector>

namespace aql {

/// One labelled input; every feature lies in [-1, 1].
struct Sample {
  std::vector<double> features;
  int label = 0;
};

struct Dataset {
  std::vector<Sample> samples;
  std::string provenance;  // e.g. "case1 grid count=100"

  bool empty() const noexcept { return samples.empty(); }
  std::size_t size() const noexcept { return samples.size(); }
  /// Feature count of the first sample, 0 when empty.
  int feature_count() const noexcept {
    return samples.empty() ? 0 : static_cast<int>(samples.front().features.size());
  }
};

/// Comma-separated rows `x1,...,xk,label` preceded by a header row.
void write_dataset_csv(std::ostream& out, const Dataset& data);

/// Inverse of write_dataset_csv. Throws kInvalidInput on malformed rows.
Dataset read_dataset_csv(std::istream& in, const std::string& provenance = "csv");

}  // namespace aql
