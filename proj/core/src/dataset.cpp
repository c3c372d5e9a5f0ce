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

#include "aql/dataset.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "aql/error.hpp"

namespace aql {

void write_dataset_csv(std::ostream& out, const Dataset& data) {
  const int k = data.feature_count();
  for (int i = 0; i < k; ++i) out << 'x' << (i + 1) << ',';
  out << "label\n";
  for (const auto& s : data.samples) {
    for (double f : s.features) out << fmt::format("{},", f);
    out << s.label << '\n';
  }
}

Dataset read_dataset_csv(std::istream& in, const std::string& provenance) {
  Dataset data;
  data.provenance = provenance;
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), ErrorKind::kInvalidInput,
          "dataset is missing its header row");
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        cells.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        fail(ErrorKind::kInvalidInput, fmt::format("row {}: cannot parse '{}'", row, cell));
      }
    }
    require(cells.size() >= 2, ErrorKind::kInvalidInput,
            fmt::format("row {}: expected features and a label", row));
    Sample s;
    s.label = static_cast<int>(cells.back());
    require(s.label == 0 || s.label == 1, ErrorKind::kInvalidInput,
            fmt::format("row {}: label must be 0 or 1", row));
    cells.pop_back();
    for (double f : cells) {
      require(std::abs(f) <= 1.0, ErrorKind::kInvalidInput,
              fmt::format("row {}: feature {} outside [-1, 1]", row, f));
    }
    s.features = std::move(cells);
    data.samples.push_back(std::move(s));
  }
  return data;
}

}  // namespace aql
