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
 * @file manifold.hpp
 * @brief Algebraic input data for a model complex.
 *
 * A ManifoldSpec carries the first Betti number, the values of the pairing
 * a -> (a u c1)[Y]/2 on a basis of H^1 (the holonomy weights, "xi"), the
 * triple cup product tensor mu_{ijk} = <a_i u a_j u a_k, [Y]>, and a
 * coefficient ring. N is the gcd of the nonzero holonomy weights.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuphom/int_matrix.hpp"
#include "cuphom/ring.hpp"

namespace cuphom {

/// xi == 0: the spin-c structure is torsion and the model is not defined.
class TorsionSpinCError : public InputError {
 public:
  using InputError::InputError;
};

/// Strictly increasing 1-based index triple (i < j < k).
using CupIndex = std::array<int, 3>;

class ManifoldSpec {
 public:
  /// Validates: b1 >= 1, xi has b1 entries and is not identically zero, cup
  /// indices lie in 1..b1 and are strictly increasing, truncation power >= 1.
  ManifoldSpec(int b1, std::vector<std::int64_t> xi, std::map<CupIndex, Integer> cup3,
               CoeffRing ring = CoeffRing::integers(), std::optional<int> truncation_power = std::nullopt);

  /// b1 = 3, xi = (N, 0, 0), <a1 u a2 u a3, [Y]> = m.
  static ManifoldSpec three_torus_like(std::int64_t n, std::int64_t m, CoeffRing ring = CoeffRing::integers());

  int b1() const noexcept { return b1_; }
  const std::vector<std::int64_t>& xi() const noexcept { return xi_; }
  /// Nonzero entries only, keyed by increasing triples.
  const std::map<CupIndex, Integer>& cup3() const noexcept { return cup3_; }
  const CoeffRing& ring() const noexcept { return ring_; }
  std::optional<int> truncation_power() const noexcept { return truncation_power_; }

  /// gcd of the nonzero holonomy weights.
  std::int64_t n_value() const noexcept { return n_value_; }
  /// Totally antisymmetric cup tensor, any 1-based index order.
  Integer mu(int i, int j, int k) const;
  /// power used for truncation: the explicit one, or b1 + 1.
  int effective_power() const noexcept { return truncation_power_.value_or(b1_ + 1); }

  ManifoldSpec with_ring(CoeffRing ring) const;
  ManifoldSpec with_truncation_power(int power) const;

  std::string to_string() const;

  friend bool operator==(const ManifoldSpec&, const ManifoldSpec&) = default;

 private:
  int b1_ = 0;
  std::vector<std::int64_t> xi_;
  std::map<CupIndex, Integer> cup3_;
  CoeffRing ring_;
  std::optional<int> truncation_power_;
  std::int64_t n_value_ = 0;
};

struct NormalizedSpec {
  ManifoldSpec spec;     ///< xi = (N, 0, ..., 0)
  IntMatrix basechange;  ///< unimodular Q with xi * Q = (N, 0, ..., 0)
};

/// Unimodular change of basis of H^1 moving xi to (N, 0, ..., 0); the cup
/// tensor is pulled back along the same change of basis.
NormalizedSpec normalize_xi(const ManifoldSpec& spec);

}  // namespace cuphom
