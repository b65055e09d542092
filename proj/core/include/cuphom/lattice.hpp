/*
   Copyright 2026 The cuphom Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cuphom/int_matrix.hpp"

namespace cuphom {

/// A sublattice of Z^dim held by its column Hermite basis. Membership,
/// coordinates and canonical coset representatives are forward substitutions
/// against that basis.
class Lattice {
 public:
  explicit Lattice(std::size_t dim = 0) : dim_(dim), basis_(dim, 0) {}

  /// Integer span of the columns of `generators`.
  static Lattice span(const IntMatrix& generators);
  static Lattice full(std::size_t dim) { return span(IntMatrix::identity(dim)); }
  /// m * Z^dim
  static Lattice scaled_full(std::size_t dim, const Integer& m) { return span(IntMatrix::scalar(dim, m)); }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const IntMatrix& basis() const noexcept { return basis_; }

  bool contains(std::span<const Integer> v) const;
  /// Coordinates with respect to basis(), or nullopt for non-members.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  /// Canonical representative of v + L: pivot coordinates reduced into [0, pivot).
  IntVector reduce(std::span<const Integer> v) const;

  Lattice operator+(const Lattice& other) const;
  /// L' = (Q L) intersected with Z^dim.
  Lattice saturated() const;

  /// {c : phi * c in this lattice}, as a Hermite basis of Z^{phi.cols()}.
  IntMatrix preimage(const IntMatrix& phi) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.dim_ == b.dim_ && a.basis_ == b.basis_; }

 private:
  /// p when this lattice is the preimage of a subspace of F_p^dim (p prime, below 2^31).
  std::optional<std::int64_t> elementary_modulus() const;

  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
};

}  // namespace cuphom
