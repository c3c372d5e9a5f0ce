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

#include <cstddef>
#include <memory>
#include <vector>

#include "aql/types.hpp"

namespace aql {

/// Dense rank-3 real tensor of shape (d, d, d), row-major in (a, b, c).
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(int d)
      : d_(d), data_(static_cast<std::size_t>(d) * d * d, 0.0) {}

  int extent() const noexcept { return d_; }

  double operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }
  double& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }

  const std::vector<double>& data() const noexcept { return data_; }

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * d_ + b) * d_ + c;
  }

  int d_ = 0;
  std::vector<double> data_;
};

/// Traceless Hermitian generators of su(D), normalized to Tr(e_a e_b) = 2 δ_ab,
/// together with their structure constants [e_a, e_b] = 2i Σ_c C_abc e_c.
///
/// Generator order is the standard generalized Gell-Mann order: for each
/// column k = 1..D-1, the symmetric and antisymmetric off-diagonal pairs
/// (j, k) for j = 0..k-1 interleaved, followed by the k-th diagonal matrix.
/// For D = 2 this yields (σ_x, σ_y, σ_z); for D = 3 it yields λ_1..λ_8.
///
/// Immutable after construction and shared by handle.
class LieBasis {
 public:
  /// Hilbert-space dimension D.
  int dimension() const noexcept { return dim_; }
  /// Algebra dimension d = D² − 1.
  int size() const noexcept { return static_cast<int>(generators_.size()); }

  const std::vector<ComplexMatrix>& generators() const noexcept { return generators_; }
  const ComplexMatrix& generator(int a) const { return generators_.at(static_cast<std::size_t>(a)); }

  const StructureTensor& structure() const noexcept { return structure_; }
  double structure(int a, int b, int c) const { return structure_(a, b, c); }

 private:
  LieBasis(int dim, std::vector<ComplexMatrix> generators, StructureTensor structure)
      : dim_(dim), generators_(std::move(generators)), structure_(std::move(structure)) {}

  friend std::shared_ptr<const LieBasis> build_su_basis(int dim);

  int dim_;
  std::vector<ComplexMatrix> generators_;
  StructureTensor structure_;
};

using BasisHandle = std::shared_ptr<const LieBasis>;

/// Builds the basis for SU(dim). Throws Error(kInvalidDimension) if dim < 2.
BasisHandle build_su_basis(int dim);

/// C_abc = (1/4i) Tr([e_a, e_b] e_c). Throws Error(kBasisInconsistency) when
/// any entry carries an imaginary part above 1e-10, which happens only if the
/// generators are not an orthonormal Hermitian set.
StructureTensor structure_constants(const std::vector<ComplexMatrix>& generators);

inline StructureTensor structure_constants(const LieBasis& basis) {
  return structure_constants(basis.generators());
}

}  // namespace aql
