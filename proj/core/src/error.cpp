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

#include "aql/error.hpp"

namespace aql {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDimension: return "invalid-dimension";
    case ErrorKind::kBasisInconsistency: return "basis-inconsistency";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kContractViolation: return "contract-violation";
    case ErrorKind::kDegeneracy: return "degeneracy";
    case ErrorKind::kConfiguration: return "configuration";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kUnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace aql
