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

#include <cmath>

#include <gtest/gtest.h>

#include "aql/error.hpp"
#include "aql/su_basis.hpp"
#include "oracles.hpp"

namespace aql {
namespace {

TEST(SuBasis, QubitGeneratorsArePauliInOrder) {
  const BasisHandle b = build_su_basis(2);
  ASSERT_EQ(b->size(), 3);
  for (int a = 0; a < 3; ++a) {
    EXPECT_EQ((b->generator(a) - oracle::pauli(a)).norm(), 0.0) << "generator " << a;
  }
}

TEST(SuBasis, GeneratorsAreHermitianAndTraceless) {
  for (int dim : {2, 3, 4, 5}) {
    const BasisHandle b = build_su_basis(dim);
    ASSERT_EQ(b->size(), dim * dim - 1);
    for (const auto& g : b->generators()) {
      EXPECT_LE((g - g.adjoint()).norm(), 1e-12);
      EXPECT_LE(std::abs(g.trace()), 1e-12);
    }
  }
}

TEST(SuBasis, QutritTraceOrthonormalityOverAllPairs) {
  const BasisHandle b = build_su_basis(3);
  ASSERT_EQ(b->size(), 8);
  for (int a = 0; a < 8; ++a) {
    for (int c = 0; c < 8; ++c) {
      const Complex t = (b->generator(a) * b->generator(c)).trace();
      EXPECT_NEAR(t.real(), a == c ? 2.0 : 0.0, 1e-12);
      EXPECT_NEAR(t.imag(), 0.0, 1e-12);
    }
  }
}

TEST(SuBasis, QutritGeneratorsAreTheGellMannMatrices) {
  const BasisHandle b = build_su_basis(3);
  for (int a = 0; a < 8; ++a) {
    EXPECT_LE((b->generator(a) - oracle::gell_mann(a)).norm(), 1e-15) << "lambda " << a + 1;
  }
}

TEST(SuBasis, RejectsDimensionBelowTwo) {
  for (int dim : {1, 0, -3}) {
    try {
      build_su_basis(dim);
      FAIL() << "dim " << dim;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidDimension);
    }
  }
}

TEST(SuBasis, BuildIsDeterministic) {
  for (int dim : {2, 3, 4}) {
    const BasisHandle a = build_su_basis(dim);
    const BasisHandle b = build_su_basis(dim);
    EXPECT_EQ(a->structure().data(), b->structure().data());
    for (int i = 0; i < a->size(); ++i) EXPECT_EQ(a->generator(i), b->generator(i));
  }
}

TEST(StructureConstants, QubitIsLeviCivita) {
  const BasisHandle b = build_su_basis(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        EXPECT_NEAR(b->structure(i, j, k), oracle::levi_civita(i, j, k), 1e-12);
  EXPECT_NEAR(b->structure(0, 1, 2), 1.0, 1e-12);
}

TEST(StructureConstants, QutritMatchesStandardTable) {
  const BasisHandle b = build_su_basis(3);
  EXPECT_NEAR(b->structure(0, 1, 2), 1.0, 1e-12);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k)
        EXPECT_NEAR(b->structure(i, j, k), oracle::su3_f(i, j, k), 1e-12)
            << i + 1 << ' ' << j + 1 << ' ' << k + 1;
}

TEST(StructureConstants, RepeatedIndexVanishes) {
  for (int dim : {2, 3, 4}) {
    const BasisHandle b = build_su_basis(dim);
    const int d = b->size();
    EXPECT_EQ(b->structure(0, 0, 1), 0.0);
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c) {
        EXPECT_NEAR(b->structure(a, a, c), 0.0, 1e-12);
        EXPECT_NEAR(b->structure(a, c, a), 0.0, 1e-12);
        EXPECT_NEAR(b->structure(c, a, a), 0.0, 1e-12);
      }
  }
}

TEST(StructureConstants, TotallyAntisymmetric) {
  for (int dim : {2, 3, 4}) {
    const BasisHandle b = build_su_basis(dim);
    const int d = b->size();
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          const double c = b->structure(x, y, z);
          EXPECT_NEAR(c, -b->structure(y, x, z), 1e-12);
          EXPECT_NEAR(c, -b->structure(x, z, y), 1e-12);
          EXPECT_NEAR(c, b->structure(y, z, x), 1e-12);
        }
  }
}

TEST(StructureConstants, ReconstructCommutators) {
  for (int dim : {2, 3, 4}) {
    const BasisHandle b = build_su_basis(dim);
    const int d = b->size();
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        const ComplexMatrix& ex = b->generator(x);
        const ComplexMatrix& ey = b->generator(y);
        ComplexMatrix rhs = ComplexMatrix::Zero(dim, dim);
        for (int z = 0; z < d; ++z) rhs += 2.0 * kI * b->structure(x, y, z) * b->generator(z);
        EXPECT_LE((ex * ey - ey * ex - rhs).norm(), 1e-10);
      }
  }
}

TEST(StructureConstants, RecomputedFromGeneratorsMatchesCache) {
  const BasisHandle b = build_su_basis(3);
  EXPECT_EQ(structure_constants(*b).data(), b->structure().data());
}

TEST(StructureConstants, RejectsNonHermitianSet) {
  // σ_x, iσ_y, σ_z: the commutator trace picks up an imaginary part.
  std::vector<ComplexMatrix> gens = {oracle::pauli(0), kI * oracle::pauli(1), oracle::pauli(2)};
  try {
    structure_constants(gens);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBasisInconsistency);
  }
}

}  // namespace
}  // namespace aql
