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
 * @file normal_form.hpp
 * @brief Hermite and Smith normal forms over Z, and what is read off them.
 *
 * Pivoting always picks the nonzero entry of least absolute value. Dense
 * storage throughout; the matrices met here stay below a few hundred rows.
 *
 * When auditing is on (see NormalFormAudit) every HNF/SNF call re-verifies its
 * own postconditions: the transform products reproduce the normal form and the
 * transforms have determinant +-1. A violated identity throws std::logic_error.
 */

#include <atomic>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuphom/int_matrix.hpp"

namespace cuphom {

/// Column-style Hermite form: H = M * U, U unimodular. The first `rank` columns
/// of H are nonzero; column k has its pivot (positive) at pivot_rows[k], zeros
/// above it, and entries left of the pivot in that row reduced into [0, pivot).
/// The trailing columns of U span the integer kernel of M.
struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

/// S = P * M * Q with S diagonal, nonnegative, d_1 | d_2 | ... ; P and Q unimodular.
struct SmithResult {
  IntMatrix S;
  IntMatrix P;
  IntMatrix Q;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

/// Isomorphism type Z^free_rank + Z/d_1 + ... + Z/d_k with d_i | d_{i+1}, d_i >= 2.
struct AbelianGroupType {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_invariants;

  bool is_zero() const { return free_rank == 0 && torsion_invariants.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Order of the group; only meaningful when is_finite().
  Integer order() const;
  std::string to_string() const;

  friend bool operator==(const AbelianGroupType&, const AbelianGroupType&) = default;
};

struct MembershipResult {
  bool member = false;
  IntVector witness;  ///< M * witness == v when member
};

/// With `with_transform = false`, U is left empty (unless auditing is on).
HermiteResult hermite_normal_form(const IntMatrix& m, bool with_transform = true);
SmithResult smith_normal_form(const IntMatrix& m);

/// Integer column span membership with witness.
MembershipResult lattice_membership(const IntMatrix& m, std::span<const Integer> v);

/// Z^rows / colspan(M).
AbelianGroupType cokernel_type(const IntMatrix& m);

/// Basis (as columns) of {x in Z^cols : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);
/// Basis (as columns) of the integer column span of M, in Hermite form.
IntMatrix image_basis(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws InputError when |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Postcondition auditing switch and counters. Defaults to on when the
/// library is built with CUPHOM_CHECK_POSTCONDITIONS.
class NormalFormAudit {
 public:
  static void enable(bool on) noexcept;
  static bool enabled() noexcept;
  static std::size_t hermite_checks() noexcept;
  static std::size_t smith_checks() noexcept;
  static void reset_counters() noexcept;
};

}  // namespace cuphom
