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
 * @file umodule.hpp
 * @brief Homology of the model complex as a finitely presented module with T and U actions.
 *
 * Homology is computed over the truncated ring A_p = R[T]/(f), f = (T^N - 1)^p.
 * For a free complex C with f H(C) = 0, the sequence 0 -> C -f-> C -> C/f -> 0
 * gives 0 -> H(C) -> H(C/f) -> H(C) -> 0, so H(C/f) alone is too large.
 * H(C) is recovered as the kernel of the connecting map: a cycle z of C/f
 * survives when D(lift z) / f is a boundary mod f. The division is done with a
 * single lift to R[T]/(f^2).
 *
 * The result is presented as Z^r / L with integer matrices for T, T^-1 and
 * (optionally) a perturbed U. Unit Smith invariants are pruned, so every
 * ambient generator is a nontrivial coordinate of the quotient.
 *
 * Coefficients: Z/m adds m Z^r to L; Q saturates L, so the quotient is free
 * and class equality over Q is membership in the saturated lattice.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuphom/complex.hpp"
#include "cuphom/lattice.hpp"
#include "cuphom/normal_form.hpp"

namespace cuphom {

enum class Parity { Even, Odd, Total };

std::string to_string(Parity p);

struct HClass {
  IntVector coords;
  friend bool operator==(const HClass&, const HClass&) = default;
};

struct PresentedUModule {
  std::size_t ambient_rank = 0;
  Lattice relations;          ///< relation lattice in Z^ambient_rank
  IntMatrix t_action;         ///< T on ambient coordinates (descends to the quotient)
  IntMatrix t_inverse;
  std::optional<IntMatrix> u_action;  ///< T^-1 + P when a perturbation P is installed
  std::int64_t n_value = 1;
  int b1 = 0;
  int power = 1;              ///< truncation power the module was computed at
  std::vector<int> grading;   ///< filtration level (top Morse index) of each generator's chain representative
  IntMatrix chain_basis;      ///< column j: chain representative of generator j in C (x) A_p
  std::vector<std::size_t> chain_generators;  ///< complex generators covered by chain_basis rows
  CoeffRing ring;
  std::string u_label = "U = T^-1";

  bool is_zero() const { return ambient_rank == 0; }
  HClass generator(std::size_t i) const;
  HClass zero_class() const { return HClass{IntVector(ambient_rank)}; }
  /// Z-isomorphism type of the quotient (the R-module seen as an abelian group).
  AbelianGroupType group_type() const { return cokernel_type(relations.basis()); }
  const IntMatrix& u_matrix() const { return u_action ? *u_action : t_inverse; }
};

/// Invariants compared by the stability check and shown by the CLI.
struct ModuleInvariants {
  AbelianGroupType group;
  bool t_n_identity = false;   ///< T^N = id on the module
  int nilpotency = 0;          ///< least j with (T^N - 1)^j = 0 on every generator (-1 if > power)

  friend bool operator==(const ModuleInvariants&, const ModuleInvariants&) = default;
};

ModuleInvariants module_invariants(const PresentedUModule& m);

/// Dimension over the coefficient field (Q or Z/p). Throws InputError otherwise.
std::size_t field_dimension(const PresentedUModule& m);

struct HomologyOptions {
  std::optional<int> power;             ///< default: spec truncation power, else b1 + 1
  bool stability_check = true;          ///< recompute at power + 1, require equal invariants
  std::optional<PolyMatrix> perturbation;  ///< P, installed as U = T^-1 + P
};

/// Homology of (C, d1 + d3) in the given parity. Throws StabilityError when
/// the invariants at power and power + 1 disagree.
PresentedUModule homology(const ChainComplex& cx, Parity parity, const HomologyOptions& options = {});

/// d1-homology in each Morse degree 0..b1.
std::vector<PresentedUModule> e2_page(const ChainComplex& cx, const HomologyOptions& options = {});

/// Cokernel of the 4x4 matrix [[T^N-1,0,0,-mT],[0,T^N-1,0,0],[0,0,T^N-1,0],[0,0,0,T^N-1]]
/// over R[T, T^-1], truncated at `power` (exact: (T^N - 1)^2 kills the cokernel).
PresentedUModule paper_module(std::int64_t n, std::int64_t m, CoeffRing ring = CoeffRing::integers(), int power = 4);

/// Class of (0, 0, 0, i) in paper_module.
HClass paper_sigma(const PresentedUModule& m, std::int64_t i);
/// Class of basis vector e_k (k = 1..4) of paper_module, scaled by T^shift.
HClass paper_basis_class(const PresentedUModule& m, int k, std::int64_t shift = 0);

bool class_equal(const PresentedUModule& m, const HClass& x, const HClass& y);
bool class_is_zero(const PresentedUModule& m, const HClass& x);
/// Canonical coset representative.
HClass reduce_class(const PresentedUModule& m, const HClass& x);

enum class Variable { T, U };

/// p evaluated at T (the t_action) or at U (u_action, else T^-1), applied to x.
/// Coefficients must be integral.
HClass apply_poly(const PresentedUModule& m, const LaurentPoly& p, const HClass& x, Variable var = Variable::T);

struct CyclicityReport {
  bool cyclic = false;
  Integer k_min = 0;             ///< least k >= 1 with (T^k - 1) x = 0, when cyclic
  Integer tested_exponent = 0;   ///< N s e
  Integer s = 1;                 ///< order of T on the torsion of Z[T] x
  Integer e = 1;                 ///< exponent of that torsion
  std::vector<std::string> trail;
};

/// Decides whether U^k x = x for some k >= 1 (with U = T^-1 this is (T^k - 1) x = 0).
CyclicityReport is_u_cyclic(const PresentedUModule& m, const HClass& x);

struct CyclicClassResult {
  HClass start;
  HClass sigma;
  int iterations = 0;  ///< j with sigma = (1 - U^N)^j start
  std::vector<std::string> trail;
};

/// A nonzero class fixed by U^N, found by applying (1 - U^N) to `start`
/// (default: the first nonzero generator) until the next step would vanish.
/// Throws InputError on the zero module or a zero start.
CyclicClassResult find_u_cyclic_class(const PresentedUModule& m, const std::optional<HClass>& start = std::nullopt);

/// Chain-level admissibility of a perturbation: lowers Morse index strictly,
/// preserves parity, and commutes with the differential. Throws InputError.
void validate_perturbation(const ChainComplex& cx, const PolyMatrix& p);

/// Random admissible perturbation: sum c T^a c_G over even |G| >= 2, plus D H + H D
/// with H of Morse degree -1. Coefficients in [-3, 3].
template <class Rng>
PolyMatrix random_perturbation(const ChainComplex& cx, Rng& rng);

struct AssocGradedReport {
  bool filtration_lowering = false;
  bool annihilated = false;
  int height = 0;
  std::string witness;
  bool ok() const { return filtration_lowering && annihilated; }
};

/// With U = T^-1 + P: U - T^-1 lowers the filtration on homology representatives
/// and (1 - U^N)^{b1 + 1} kills every generator.
AssocGradedReport check_assoc_graded_u(const ChainComplex& cx, const std::optional<PolyMatrix>& perturbation = std::nullopt,
                                       std::optional<int> height = std::nullopt);

// Implementation detail of random_perturbation.
PolyMatrix perturbation_from_draws(const ChainComplex& cx, const std::vector<int>& draws);
std::size_t perturbation_draw_count(const ChainComplex& cx);

template <class Rng>
PolyMatrix random_perturbation(const ChainComplex& cx, Rng& rng) {
  std::vector<int> draws(perturbation_draw_count(cx));
  for (auto& d : draws) d = static_cast<int>(rng() % 7) - 3;
  return perturbation_from_draws(cx, draws);
}

}  // namespace cuphom
