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
 * @file field_engine.hpp
 * @brief Homology over k[T, T^-1] for a field k, by Smith form over the PID k[T].
 *
 * Independent of the truncated-ring engine: no lattices, no truncation. For a
 * spot C' -> C -> C'' the kernel of the outgoing map is a direct summand, so
 * H = Z/B has free rank n - rk(out) - rk(in) and torsion given by the
 * non-unit invariant factors of the incoming map. Powers of T are units and
 * are stripped.
 */

#include <vector>

#include "cuphom/complex.hpp"
#include "cuphom/umodule.hpp"

namespace cuphom {

struct PolySmith {
  std::size_t rank = 0;
  /// Nonzero diagonal entries, monic, in divisibility order.
  std::vector<LaurentPoly> invariant_factors;
};

/// Smith form over k[T] (k = Q or F_p). Laurent entries are first moved to
/// ordinary polynomials by scaling columns with powers of T.
PolySmith poly_smith_form(const PolyMatrix& m, const CoeffRing& field);

/// Isomorphism type of a finitely generated k[T, T^-1]-module.
struct FieldModuleType {
  std::size_t free_rank = 0;
  /// Non-unit invariant factors: monic, nonzero constant term, divisibility order.
  std::vector<LaurentPoly> torsion;

  friend bool operator==(const FieldModuleType&, const FieldModuleType&) = default;
  std::string to_string() const;
};

/// Homology of (C, d1 + d3) in the given parity, with coefficients in `field`.
FieldModuleType field_homology(const ChainComplex& cx, Parity parity, const CoeffRing& field);

/// The same type read off a truncated-engine module over Q or Z/p: the
/// invariant factors of tI - A, A the matrix of T on the quotient.
FieldModuleType truncated_field_type(const PresentedUModule& m);

}  // namespace cuphom
