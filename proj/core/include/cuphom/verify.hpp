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
 * @file verify.hpp
 * @brief Named checks with reproducible pass/fail reports.
 *
 * Every check is a pure function of its parameters (and seed). A failing
 * report always carries a "witness" entry in its details.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuphom/umodule.hpp"

namespace cuphom {

using Json = nlohmann::ordered_json;

struct CheckReport {
  std::string check_name;
  Json parameters = Json::object();
  bool passed = false;
  Json details = Json::object();

  std::string verdict() const { return passed ? "pass" : "fail"; }
  Json to_json() const;
  std::string to_text() const;
};

Json to_json(const Integer& v);
Json to_json(const HClass& x);
Json to_json(const AbelianGroupType& g);
Json to_json(const ModuleInvariants& inv);
Json to_json(const ManifoldSpec& spec);

/// Knobs for random_spec. Entries are drawn uniformly from [-bound, bound].
struct SpecSampler {
  int max_b1 = 5;
  int xi_bound = 6;
  int cup_bound = 4;
  CoeffRing ring = CoeffRing::integers();
};

/// A valid random spec (xi never identically zero). Uses only rng() so draws
/// are the same on every platform.
ManifoldSpec random_spec(std::mt19937_64& rng, const SpecSampler& sampler);

/// d1-homology in degree d is (R[T]/(T^N - 1))^C(b1-1, d) and T^N = id.
/// Ring must be Z or a field.
CheckReport check_lemma_torus(int b1, const std::vector<std::int64_t>& xi, const CoeffRing& ring);

/// Homology is nonzero and contains a nonzero sigma with U^N sigma = sigma.
/// Over Z/2 every generator must in addition be U-cyclic.
CheckReport check_theorem1(const ManifoldSpec& spec);

/// (1 - U^N)^exponent kills every generator, for U = T^-1 and for `trials`
/// random admissible perturbations U = T^-1 + P. Default exponent b1 + 1.
CheckReport check_annihilation_bound(const ManifoldSpec& spec, int trials, std::uint64_t seed = 0,
                                     std::optional<int> exponent = std::nullopt);

/// The same sweep on the cokernel of the 4x4 matrix, over Z, testing the
/// classes sigma_i (i = 1..4) before the generators.
CheckReport check_annihilation_paper(std::int64_t n, std::int64_t m, int exponent);

/// Classes sigma_i = [(0,0,0,i)], 1 <= i <= i_max, in the 4x4 cokernel over Z:
/// not U-cyclic, (T^k - 1) sigma_i != 0 for k <= k_max, (T^N - 1)^2 sigma_i = 0,
/// pairwise distinct. m = 0 is rejected.
CheckReport check_theorem2(std::int64_t n, std::int64_t m, int i_max = 6, int k_max = 24);

/// Degree-d curve classes on a genus-g surface fibre: with k = d - g + 1,
/// <c1, [Sigma]> = 2k, and the annihilating polynomial is (U^k - 1)^(b1 + 1),
/// valid when N divides k. Requires d > max(2g - 2, 0).
CheckReport check_pfh_translation(std::int64_t d, std::int64_t g, int b1, std::int64_t n);

}  // namespace cuphom
