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

#include <numeric>
#include <random>

#include "cuphom/laurent.hpp"
#include "cuphom/ring.hpp"
#include "oracles.hpp"

namespace cuphom {
namespace {

const CoeffRing kZ = CoeffRing::integers();
const CoeffRing kQ = CoeffRing::rationals();

LaurentPoly tn1(std::int64_t n, CoeffRing r = kZ) { return LaurentPoly::t_power_minus_one(n, r); }
LaurentPoly mono(long c, std::int64_t e, CoeffRing r = kZ) { return LaurentPoly::monomial(c, e, r); }

TEST(CoeffRing, FieldFlags) {
  EXPECT_FALSE(kZ.is_field());
  EXPECT_TRUE(kQ.is_field());
  EXPECT_TRUE(CoeffRing::integers_mod(5).is_field());
  EXPECT_FALSE(CoeffRing::integers_mod(6).is_field());
  EXPECT_THROW(CoeffRing::integers_mod(1), InputError);
  EXPECT_THROW(CoeffRing::integers_mod(0), InputError);
}

TEST(CoeffRing, Parse) {
  EXPECT_EQ(CoeffRing::parse("Z"), kZ);
  EXPECT_EQ(CoeffRing::parse("Q"), kQ);
  EXPECT_EQ(CoeffRing::parse("Zmod:7"), CoeffRing::integers_mod(7));
  EXPECT_THROW(CoeffRing::parse("Zmod:x"), InputError);
  EXPECT_THROW(CoeffRing::parse("R"), InputError);
}

TEST(CoeffRing, ModularNormalization) {
  const auto r = CoeffRing::integers_mod(5);
  EXPECT_EQ(r.normalize(-1), 4);
  EXPECT_EQ(r.normalize(12), 2);
  EXPECT_EQ(r.inverse(2), 3);
}

TEST(Laurent, DifferenceOfSquares) { EXPECT_EQ(poly_arith(tn1(1), mono(1, 1) + mono(1, 0), PolyOp::Mul), tn1(2)); }

TEST(Laurent, AdditiveInverse) {
  EXPECT_TRUE(poly_arith(tn1(4), -tn1(4), PolyOp::Add).is_zero());
  EXPECT_TRUE((tn1(3) - tn1(3)).is_zero());
}

TEST(Laurent, SquareOverZmod2MatchesSchoolbook) {
  const auto z2 = CoeffRing::integers_mod(2);
  for (std::int64_t n = 1; n <= 5; ++n) {
    const LaurentPoly a = -tn1(n, z2);  // 1 - T^N
    const LaurentPoly sq = a * a;
    EXPECT_EQ(sq, oracle::schoolbook(a, a));
    EXPECT_EQ(sq, (mono(1, 0, z2) - mono(1, 2 * n, z2)));
  }
}

TEST(Laurent, RingMismatchThrows) { EXPECT_THROW(poly_arith(tn1(1), tn1(1, kQ), PolyOp::Add), RingMismatch); }

TEST(Laurent, UnitInverse) { EXPECT_TRUE((mono(1, 3) * mono(1, -3)).is_one()); }

TEST(Laurent, SubstituteSwapsVariable) {
  const LaurentPoly one_minus_u_n = mono(1, 0) - mono(1, 3);  // read as 1 - U^3
  EXPECT_EQ(poly_substitute(one_minus_u_n, -1), mono(1, 0) - mono(1, -3));
  EXPECT_EQ(poly_substitute(mono(1, 0), 5), mono(1, 0));
  EXPECT_THROW(poly_substitute(tn1(2), 0), InputError);
}

TEST(Laurent, SubstitutedAnnihilatorIsSignedPower) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (unsigned b1 = 1; b1 <= 4; ++b1) {
      const unsigned k = b1 + 1;
      LaurentPoly lhs = poly_substitute(mono(1, 0) - mono(1, n), -1).pow(k);
      LaurentPoly expected = oracle::schoolbook(lhs, mono(1, static_cast<std::int64_t>(n * k)));
      // (1 - T^-N)^k T^{Nk} = (T^N - 1)^k: the sign is +1 for every k.
      LaurentPoly rhs = tn1(n).pow(k);
      EXPECT_EQ(expected, rhs) << "N=" << n << " b1=" << b1;
    }
  }
}

TEST(Laurent, GcdOfAnnihilatorAndCycle) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t k = 1; k <= 12; ++k) {
      const auto a = tn1(n).pow(2), b = tn1(k);
      const GcdResult r = poly_gcd_over_rationals(a, b);
      EXPECT_EQ(r.g, tn1(std::gcd(n, k), kQ)) << "N=" << n << " k=" << k;
      EXPECT_EQ(r.u * a.over(kQ) + r.v * b.over(kQ), r.g);
    }
  }
}

TEST(Laurent, GcdIdempotent) { EXPECT_EQ(poly_gcd_over_rationals(tn1(1), tn1(1)).g, tn1(1, kQ)); }

TEST(Laurent, GcdOverPrimeField) {
  const auto f3 = CoeffRing::integers_mod(3);
  const GcdResult r = poly_gcd(tn1(3, f3), tn1(6, f3));
  EXPECT_EQ(r.g, tn1(3, f3));
  EXPECT_EQ(r.u * tn1(3, f3) + r.v * tn1(6, f3), r.g);
  EXPECT_THROW(poly_gcd(tn1(2, CoeffRing::integers_mod(6)), tn1(3, CoeffRing::integers_mod(6))), InputError);
}

TEST(Laurent, BezoutClearingScalars) {
  const auto r = bezout_integer_clearing(LaurentPoly::constant(Rational(1, 2), kQ),
                                         LaurentPoly::constant(Rational(1, 3), kQ));
  EXPECT_EQ(r.n, 6);
  EXPECT_EQ(r.u, LaurentPoly::constant(3));
  EXPECT_EQ(r.v, LaurentPoly::constant(2));
  const auto same = bezout_integer_clearing(tn1(2), mono(4, 1));
  EXPECT_EQ(same.n, 1);
  EXPECT_EQ(same.u, tn1(2));
}

TEST(Laurent, BezoutClearingFromEuclid) {
  const auto a = tn1(2).pow(2), b = tn1(3);
  const GcdResult g = poly_gcd_over_rationals(a, b);
  EXPECT_EQ(g.g, tn1(1, kQ));
  const IntegerBezout c = bezout_integer_clearing(g.u, g.v);
  // Oracle: lcm of every denominator in u and v.
  Integer expected = 1;
  for (const auto* p : {&g.u, &g.v}) {
    for (const auto& [e, q] : p->terms()) expected = lcm(expected, q.get_den());
  }
  EXPECT_EQ(c.n, expected);
  EXPECT_TRUE(c.u.has_integer_coefficients() && c.v.has_integer_coefficients());
  EXPECT_EQ(c.u * a + c.v * b, (g.g * Rational(c.n)).over(CoeffRing::integers()));
}

class LaurentProperties : public ::testing::TestWithParam<int> {};

TEST_P(LaurentProperties, RingAxiomsAndCanonicalForm) {
  std::mt19937_64 rng(9000 + GetParam());
  const CoeffRing rings[] = {kZ, kQ, CoeffRing::integers_mod(2), CoeffRing::integers_mod(6), CoeffRing::integers_mod(7)};
  for (const auto& ring : rings) {
    for (int t = 0; t < 40; ++t) {
      const auto a = oracle::random_laurent(rng, ring, 5, -4, 6);
      const auto b = oracle::random_laurent(rng, ring, 5, -4, 6);
      const auto c = oracle::random_laurent(rng, ring, 5, -4, 6);
      for (const auto* p : {&a, &b, &c}) {
        for (const auto& [e, q] : p->terms()) ASSERT_NE(q, 0);
      }
      for (PolyOp op : {PolyOp::Add, PolyOp::Sub, PolyOp::Mul}) {
        const LaurentPoly r = poly_arith(a, b, op);
        for (const auto& [e, q] : r.terms()) ASSERT_NE(q, 0);
      }
      EXPECT_EQ(a * b, oracle::schoolbook(a, b));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(poly_substitute(a * b, -1), poly_substitute(a, -1) * poly_substitute(b, -1));
      EXPECT_EQ(poly_substitute(a * b, 3), poly_substitute(a, 3) * poly_substitute(b, 3));
    }
  }
}

TEST_P(LaurentProperties, GcdContract) {
  std::mt19937_64 rng(7100 + GetParam());
  for (int t = 0; t < 40; ++t) {
    const auto common = oracle::random_laurent(rng, kZ, 3, 0, 3);
    const auto a = oracle::random_laurent(rng, kZ, 4, -2, 4) * common;
    const auto b = oracle::random_laurent(rng, kZ, 4, -2, 4) * common;
    if (a.is_zero() || b.is_zero()) continue;
    const GcdResult r = poly_gcd_over_rationals(a, b);
    EXPECT_EQ(r.u * a.over(kQ) + r.v * b.over(kQ), r.g);
    EXPECT_TRUE(poly_divmod(unit_normalize(a.over(kQ)).first, r.g).second.is_zero());
    EXPECT_TRUE(poly_divmod(unit_normalize(b.over(kQ)).first, r.g).second.is_zero());
    if (!common.is_zero()) {
      EXPECT_TRUE(poly_divmod(r.g, make_monic(unit_normalize(common.over(kQ)).first)).second.is_zero());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LaurentProperties, ::testing::Range(0, 4));

}  // namespace
}  // namespace cuphom
