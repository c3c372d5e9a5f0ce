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

#include "aql/su_basis.hpp"

#include <cmath>
#include <string>

#include "aql/error.hpp"

namespace aql {
namespace {

constexpr double kImaginaryResidueTolerance = 1e-10;

std::vector<ComplexMatrix> gell_mann_generators(int dim) {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(dim * dim - 1));
  for (int k = 1; k < dim; ++k) {
    for (int j = 0; j < k; ++j) {
      ComplexMatrix sym = ComplexMatrix::Zero(dim, dim);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      out.push_back(std::move(sym));

      ComplexMatrix anti = ComplexMatrix::Zero(dim, dim);
      anti(j, k) = -kI;
      anti(k, j) = kI;
      out.push_back(std::move(anti));
    }
    // diag(1, ..., 1, -k, 0, ..., 0) with k ones, scaled to Tr(e²) = 2.
    ComplexMatrix diag = ComplexMatrix::Zero(dim, dim);
    const double scale = std::sqrt(2.0 / (k * (k + 1.0)));
    for (int l = 0; l < k; ++l) diag(l, l) = scale;
    diag(k, k) = -k * scale;
    out.push_back(std::move(diag));
  }
  return out;
}

}  // namespace

StructureTensor structure_constants(const std::vector<ComplexMatrix>& generators) {
  const int d = static_cast<int>(generators.size());
  StructureTensor c(d);
  const Complex inv_four_i = 1.0 / (4.0 * kI);
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const ComplexMatrix comm = generators[a] * generators[b] - generators[b] * generators[a];
      for (int e = 0; e < d; ++e) {
        // Tr(X Y) without forming the product.
        const Complex trace = (comm.transpose().cwiseProduct(generators[e])).sum();
        const Complex value = inv_four_i * trace;
        if (std::abs(value.imag()) > kImaginaryResidueTolerance) {
          fail(ErrorKind::kBasisInconsistency,
               "structure constant (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(e) + ") has imaginary part " + std::to_string(value.imag()));
        }
        c(a, b, e) = value.real();
        c(b, a, e) = -value.real();
      }
    }
  }
  return c;
}

BasisHandle build_su_basis(int dim) {
  require(dim >= 2, ErrorKind::kInvalidDimension,
          "Hilbert-space dimension must be at least 2, got " + std::to_string(dim));
  auto generators = gell_mann_generators(dim);
  auto structure = structure_constants(generators);
  return BasisHandle(new LieBasis(dim, std::move(generators), std::move(structure)));
}

}  // namespace aql
