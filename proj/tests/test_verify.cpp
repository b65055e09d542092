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

#include <gtest/gtest.h>

#include "cuphom/realization.hpp"
#include "cuphom/verify.hpp"
#include "module_oracles.hpp"
#include "oracles.hpp"

namespace cuphom {
namespace {

// dim over F_p of d1-homology in each degree, from ranks of the complex
// reduced mod T^N - 1: dim H_d(C/f) = dim H_d + dim H_{d-1} when f H = 0.
std::vector<std::size_t> koszul_dims_mod_p(int b1, const std::vector<std::int64_t>& xi, std::int64_t p) {
  const auto cx = build_complex(ManifoldSpec(b1, xi, {}));
  const TruncatedRing ring(cx.spec().n_value(), 1);
  const std::size_t rk = ring.rank();
  auto boundary_rank = [&](int d) -> std::size_t {
    if (d <= 0 || d > b1) return 0;
    return oracle::rank_mod_p(ring.realize(cx.d1().submatrix(cx.generators_of_degree(d - 1), cx.generators_of_degree(d))), p);
  };
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (int d = 0; d <= b1; ++d) {
    const std::size_t h = cx.generators_of_degree(d).size() * rk - boundary_rank(d) - boundary_rank(d + 1);
    out.push_back(h - prev);
    prev = out.back();
  }
  return out;
}

std::vector<long> observed(const CheckReport& r) {
  std::vector<long> out;
  for (const auto& d : r.details["degrees"]) out.push_back(d["observed_rank"].get<long>());
  return out;
}

TEST(LemmaTorus, ThreeTorusOverQ) {
  const auto r = check_lemma_torus(3, {2, 0, 0}, CoeffRing::rationals());
  EXPECT_TRUE(r.passed) << r.to_text();
  EXPECT_EQ(observed(r), (std::vector<long>{2, 4, 2, 0}));
}

TEST(LemmaTorus, SingleCircle) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    const auto r = check_lemma_torus(1, {n}, CoeffRing::integers());
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(observed(r), (std::vector<long>{n, 0}));
  }
}

TEST(LemmaTorus, TwoCirclesModFive) {
  const auto r = check_lemma_torus(2, {3, 0}, CoeffRing::integers_mod(5));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(observed(r), (std::vector<long>{3, 3, 0}));
}

TEST(LemmaTorus, MatchesRankOracle) {
  const std::vector<std::vector<std::int64_t>> cases{{4, 6}, {3, -3, 6}, {2, 0, 4, 0}, {-5}, {1, 2, 3, 4, 5}};
  for (const auto& xi : cases) {
    const int b1 = static_cast<int>(xi.size());
    for (std::int64_t p : {2, 3, 5}) {
      const auto r = check_lemma_torus(b1, xi, CoeffRing::integers_mod(p));
      EXPECT_TRUE(r.passed) << r.to_text();
      const auto dims = koszul_dims_mod_p(b1, xi, p);
      ASSERT_EQ(observed(r).size(), dims.size());
      for (std::size_t d = 0; d < dims.size(); ++d) EXPECT_EQ(observed(r)[d], static_cast<long>(dims[d])) << "p=" << p;
    }
  }
}

TEST(LemmaTorus, RejectsCompositeModulus) {
  EXPECT_THROW(check_lemma_torus(2, {1, 0}, CoeffRing::integers_mod(6)), InputError);
  EXPECT_THROW(check_lemma_torus(2, {0, 0}, CoeffRing::integers()), TorsionSpinCError);
}

TEST(Theorem1, PaperFamily) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t m : {0, 1, 2}) {
      const auto r = check_theorem1(ManifoldSpec::three_torus_like(n, m));
      EXPECT_TRUE(r.passed) << r.to_text();
      EXPECT_LE(r.details["iterations"].get<int>(), 4);
    }
  }
}

TEST(Theorem1, SingleCircle) {
  const auto r = check_theorem1(ManifoldSpec(1, {3}, {}));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.details["iterations"].get<int>(), 0);
}

TEST(Theorem1, EveryGeneratorCyclicOverZ2) {
  for (std::int64_t m : {1, 3}) {
    const auto r = check_theorem1(ManifoldSpec::three_torus_like(2, m, CoeffRing::integers_mod(2)));
    EXPECT_TRUE(r.passed) << r.to_text();
    EXPECT_TRUE(r.details["all_generators_cyclic"].get<bool>());
  }
}

TEST(Annihilation, PaperSpecWithPerturbations) {
  const auto r = check_annihilation_bound(ManifoldSpec::three_torus_like(2, 1), 5, 7);
  EXPECT_TRUE(r.passed) << r.to_text();
  EXPECT_EQ(r.details["runs"].size(), 6u);
}

TEST(Annihilation, PaperModuleExponents) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t m : {1, -2}) {
      const auto one = check_annihilation_paper(n, m, 1);
      EXPECT_FALSE(one.passed);
      EXPECT_EQ(one.details["witness"]["class"], "sigma_1");
      EXPECT_TRUE(check_annihilation_paper(n, m, 2).passed);
      EXPECT_TRUE(check_annihilation_paper(n, m, 4).passed);
    }
    EXPECT_TRUE(check_annihilation_paper(n, 0, 1).passed);
  }
}

TEST(Annihilation, ExponentTwoAgreesWithMembershipOracle) {
  // (T^N - 1)^2 e_k lies in the relation lattice; e_k itself does not.
  const auto m = paper_module(1, 1);
  for (std::size_t i = 0; i < m.ambient_rank; ++i) {
    const HClass img = apply_poly(m, LaurentPoly::t_power_minus_one(1).pow(2), m.generator(i));
    EXPECT_TRUE(oracle::rational_solve_member(m.relations.basis(), img.coords).has_value());
    EXPECT_FALSE(oracle::rational_solve_member(m.relations.basis(), m.generator(i).coords).has_value());
  }
}

TEST(Annihilation, ExponentOneFailsOnSpecWithWitness) {
  const auto r = check_annihilation_bound(ManifoldSpec::three_torus_like(1, 1), 0, 0, 1);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.details.contains("witness"));
}

TEST(Annihilation, Deterministic) {
  const auto spec = ManifoldSpec(3, {2, 2, 0}, {{{1, 2, 3}, 1}});
  const auto a = check_annihilation_bound(spec, 3, 11).to_json().dump();
  const auto b = check_annihilation_bound(spec, 3, 11).to_json().dump();
  EXPECT_EQ(a, b);
}

TEST(Theorem2, PaperInstances) {
  const auto r = check_theorem2(1, 1, 6, 12);
  EXPECT_TRUE(r.passed) << r.to_text();
  EXPECT_EQ(r.details["sigmas"].size(), 6u);
  EXPECT_TRUE(check_theorem2(3, 2).passed);
  EXPECT_TRUE(check_theorem2(2, -5).passed);
}

TEST(Theorem2, AgreesWithOrbitOracleModP) {
  // Reduce mod p: sigma_i is then cyclic (finite module) with period dividing N p.
  for (std::int64_t p : {2, 3}) {
    const auto m = paper_module(2, 1, CoeffRing::integers_mod(p));
    const oracle::FiniteModuleOracle orb(m);
    for (std::int64_t i = 1; i <= 3; ++i) {
      const auto s = paper_sigma(m, i);
      const auto c = is_u_cyclic(m, s);
      const auto period = orb.orbit_period(s.coords, 1000);
      ASSERT_TRUE(period.has_value());
      EXPECT_TRUE(c.cyclic);
      EXPECT_EQ(c.k_min, Integer(static_cast<long>(*period)));
    }
  }
}

TEST(Theorem2, RejectsZeroCup) {
  EXPECT_THROW(check_theorem2(1, 0), InputError);
  EXPECT_THROW(check_theorem2(0, 1), InputError);
}

TEST(PfhTranslation, Examples) {
  const auto r = check_pfh_translation(3, 1, 2, 3);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.details["exponent_polynomial"], "(U^3 - 1)^3");
  EXPECT_EQ(check_pfh_translation(1, 0, 1, 2).details["d_minus_g_plus_1"], 2);
  const auto bad = check_pfh_translation(3, 1, 2, 2);
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.details["witness"]["remainder_mod_N"], 1);
  EXPECT_THROW(check_pfh_translation(2, 2, 1, 1), InputError);
  EXPECT_THROW(check_pfh_translation(0, 0, 1, 1), InputError);
}

TEST(Reports, FailAlwaysHasWitness) {
  std::vector<CheckReport> fails{check_annihilation_paper(1, 1, 1), check_pfh_translation(4, 0, 1, 3),
                                 check_annihilation_bound(ManifoldSpec::three_torus_like(2, 3), 0, 0, 1)};
  for (const auto& r : fails) {
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(r.details.contains("witness")) << r.check_name;
  }
}

TEST(RandomSpec, RespectsBoundsAndIsReproducible) {
  std::mt19937_64 a(9), b(9);
  const SpecSampler s{4, 6, 4, CoeffRing::integers_mod(3)};
  for (int t = 0; t < 100; ++t) {
    const auto x = random_spec(a, s);
    EXPECT_EQ(x, random_spec(b, s));
    EXPECT_LE(x.b1(), 4);
    for (auto v : x.xi()) EXPECT_LE(std::abs(v), 6);
    for (const auto& [idx, v] : x.cup3()) EXPECT_LE(abs(v), 4);
  }
}

}  // namespace
}  // namespace cuphom
