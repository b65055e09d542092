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

/**
 * @file realization.hpp
 * @brief Base change of the model complex to A = Z[T] / ((T^N - 1)^p).
 *
 * A is free over Z with basis 1, T, ..., T^{d-1}, d = N p. Every Laurent
 * entry of a differential becomes the d x d integer matrix of multiplication
 * by that entry in A, and generator g of the complex occupies coordinates
 * [g d, (g + 1) d).
 */

#include <cstdint>
#include <optional>
#include <utility>

#include "cuphom/complex.hpp"
#include "cuphom/int_matrix.hpp"

namespace cuphom {

/// Dense polynomial division by a monic divisor. Coefficient i is the
/// coefficient of T^i.
std::pair<IntVector, IntVector> dense_divmod(const IntVector& dividend, const IntVector& monic_divisor);

class TruncatedRing {
 public:
  TruncatedRing(std::int64_t n_value, int power);

  std::int64_t n_value() const noexcept { return n_; }
  int power() const noexcept { return power_; }
  std::size_t rank() const noexcept { return rank_; }
  /// Coefficients of (T^N - 1)^p, length rank() + 1, monic.
  const IntVector& modulus() const noexcept { return modulus_; }

  /// Reduce a dense polynomial modulo (T^N - 1)^p.
  IntVector reduce(IntVector dense) const;
  /// Image of an integral Laurent polynomial in A.
  IntVector element(const LaurentPoly& p) const;
  IntVector multiply(const IntVector& a, const IntVector& b) const;
  IntVector times_t(const IntVector& a) const;
  IntVector times_t_inverse(const IntVector& a) const;

  IntMatrix multiplication_matrix(const LaurentPoly& p) const;
  IntMatrix multiplication_matrix(const IntVector& a) const;
  IntMatrix t_matrix() const;
  IntMatrix t_inverse_matrix() const;

  /// Block matrix: entry (r, c) becomes multiplication_matrix(pm(r, c)).
  IntMatrix realize(const PolyMatrix& pm) const;

 private:
  std::int64_t n_;
  int power_;
  std::size_t rank_;
  IntVector modulus_;
};

struct Realization {
  TruncatedRing ring;
  std::size_t generators = 0;
  IntMatrix d1;
  IntMatrix d3;
  IntMatrix differential;
  IntMatrix t_action;
  IntMatrix t_inverse;
  /// m * I for coefficients in Z/m; zero columns otherwise.
  IntMatrix modulus_relations;
};

Realization truncated_realization(const ChainComplex& cx, int power);

}  // namespace cuphom
