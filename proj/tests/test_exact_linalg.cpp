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

#include <random>

#include "cuphom/complex.hpp"
#include "cuphom/lattice.hpp"
#include "cuphom/normal_form.hpp"
#include "cuphom/realization.hpp"
#include "oracles.hpp"

namespace cuphom {
namespace {

struct AuditOn : ::testing::Test {
  void SetUp() override {
    previous_ = NormalFormAudit::enabled();
    NormalFormAudit::enable(true);
  }
  void TearDown() override { NormalFormAudit::enable(previous_); }
  bool previous_ = false;
};

// Shape of a column Hermite form, checked entry by entry.
void expect_canonical_hermite(const HermiteResult& h) {
  const IntMatrix& H = h.H;
  ASSERT_EQ(h.pivot_rows.size(), h.rank);
  for (std::size_t k = 0; k < h.rank; ++k) {
    const std::size_t pr = h.pivot_rows[k];
    if (k > 0) EXPECT_GT(pr, h.pivot_rows[k - 1]);
    EXPECT_GT(H(pr, k), 0);
    for (std::size_t r = 0; r < pr; ++r) EXPECT_EQ(H(r, k), 0);
    for (std::size_t j = 0; j < k; ++j) {
      EXPECT_GE(H(pr, j), 0);
      EXPECT_LT(H(pr, j), H(pr, k));
    }
  }
  for (std::size_t c = h.rank; c < H.cols(); ++c) {
    for (std::size_t r = 0; r < H.rows(); ++r) EXPECT_EQ(H(r, c), 0);
  }
}

void expect_divisibility_chain(const SmithResult& s) {
  const auto d = s.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i + 1] != 0) {
      EXPECT_EQ(d[i + 1] % d[i], 0);
    } else {
      // zeros come last
      for (std::size_t j = i + 1; j < d.size(); ++j) EXPECT_EQ(d[j], 0);
    }
  }
  for (std::size_t r = 0; r < s.S.rows(); ++r) {
    for (std::size_t c = 0; c < s.S.cols(); ++c) {
      if (r != c) EXPECT_EQ(s.S(r, c), 0);
    }
  }
}

TEST_F(AuditOn, HermiteIdentity) {
  const auto h = hermite_normal_form(IntMatrix::identity(4));
  EXPECT_TRUE(h.H.is_identity());
  EXPECT_TRUE(h.U.is_identity());
}

TEST_F(AuditOn, HermiteAlreadyEchelon) {
  const IntMatrix m{{2, 0}, {0, 3}};
  EXPECT_EQ(hermite_normal_form(m).H, m);
}

TEST_F(AuditOn, HermiteSmallHandReduction) {
  // Columns (2,1), (4,3): c2 - 2 c1 = (0,1); then c1 - c2 = (2,0).
  const IntMatrix m{{2, 4}, {1, 3}};
  const auto h = hermite_normal_form(m);
  EXPECT_EQ(h.H, (IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(m * h.U, h.H);
  EXPECT_EQ(abs(determinant(h.U)), 1);
}

TEST_F(AuditOn, SmithCoprimeDiagonal) {
  const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.S, (IntMatrix{{1, 0}, {0, 6}}));
}

TEST_F(AuditOn, SmithZero) {
  const auto s = smith_normal_form(IntMatrix(3, 2));
  EXPECT_TRUE(s.S.is_zero());
  EXPECT_EQ(s.rank, 0u);
}

TEST_F(AuditOn, RandomHermiteAndSmithIdentities) {
  std::mt19937_64 rng(42);
  NormalFormAudit::reset_counters();
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const IntMatrix m = oracle::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    const auto h = hermite_normal_form(m);
    EXPECT_EQ(m * h.U, h.H);
    EXPECT_EQ(abs(determinant(h.U)), 1);
    expect_canonical_hermite(h);
    EXPECT_EQ(h.rank, oracle::rank_over_q(m));

    const auto s = smith_normal_form(m);
    EXPECT_EQ(s.P * m * s.Q, s.S);
    EXPECT_EQ(abs(determinant(s.P)), 1);
    EXPECT_EQ(abs(determinant(s.Q)), 1);
    expect_divisibility_chain(s);
  }
  EXPECT_GE(NormalFormAudit::hermite_checks(), 60u);
  EXPECT_GE(NormalFormAudit::smith_checks(), 60u);
}

TEST(Hermite, UniqueUnderColumnOperations) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 5, -5, 5);
    const IntMatrix v = oracle::random_unimodular(rng, 5, 20);
    EXPECT_EQ(hermite_normal_form(m).H, hermite_normal_form(m * v).H);
  }
}

TEST(Smith, RanksModPrimeMatchInvariants) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const IntMatrix m = oracle::random_matrix(rng, 5, 4, -6, 6);
    const auto d = smith_normal_form(m).diagonal();
    for (std::int64_t p : {2, 3, 5, 7}) {
      std::size_t units = 0;
      for (const auto& x : d) units += (x != 0 && x % p != 0) ? 1 : 0;
      EXPECT_EQ(units, oracle::rank_mod_p(m, p));
    }
  }
}

TEST(Membership, Trivial) {
  const IntMatrix m{{2}};
  const IntVector zero{0};
  const auto r = lattice_membership(m, zero);
  EXPECT_TRUE(r.member);
  EXPECT_EQ(r.witness, IntVector{0});
  EXPECT_FALSE(lattice_membership(m, IntVector{3}).member);
}

TEST(Membership, AgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  int members = 0;
  for (int t = 0; t < 300; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const std::size_t rows = dim(rng), cols = dim(rng);
    const IntMatrix m = oracle::random_matrix(rng, rows, cols, -3, 3);
    IntVector v(rows);
    if (t % 2 == 0) {
      // A guaranteed member with small coefficients.
      const IntMatrix x = oracle::random_matrix(rng, cols, 1, -2, 2);
      v = m * x.column(0);
    } else {
      std::uniform_int_distribution<int> e(-4, 4);
      for (auto& x : v) x = e(rng);
    }
    const auto got = lattice_membership(m, v);
    if (got.member) {
      EXPECT_EQ(m * got.witness, v);
      ++members;
    }
    // Every witness found by enumeration must be seen by the solver; members
    // built with coefficients in [-2, 2] are always inside the box.
    const auto brute = oracle::brute_force_member(m, v, 3);
    if (t % 2 == 0) EXPECT_TRUE(brute.has_value());
    if (brute) EXPECT_TRUE(got.member) << m << v[0];
    if (!got.member) EXPECT_FALSE(brute.has_value());
  }
  EXPECT_GT(members, 100);
}

TEST(Membership, FirstGeneratorNotInTruncatedPaperImage) {
  const TruncatedRing ring(2, 2);
  const IntMatrix m = ring.realize(assemble_paper_matrix(2, 1));
  IntVector e1(m.rows());
  e1[0] = 1;
  EXPECT_FALSE(lattice_membership(m, e1).member);
  // Over F_2 the augmented matrix already gains rank, so no integer solution exists.
  EXPECT_EQ(oracle::rank_mod_p(m.hconcat(IntMatrix::from_columns(m.rows(), {e1})), 2), oracle::rank_mod_p(m, 2) + 1);
}

TEST(Cokernel, SmallCases) {
  const auto a = cokernel_type(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(a.free_rank, 0u);
  EXPECT_EQ(a.torsion_invariants, std::vector<Integer>{6});
  const auto z = cokernel_type(IntMatrix(3, 3));
  EXPECT_EQ(z.free_rank, 3u);
  EXPECT_TRUE(z.torsion_invariants.empty());
}

TEST(Cokernel, TruncatedPaperMatrixAgreesWithModPRanks) {
  const TruncatedRing ring(1, 2);
  const IntMatrix m = ring.realize(assemble_paper_matrix(1, 1));
  ASSERT_EQ(m.rows(), 8u);
  const auto type = cokernel_type(m);
  EXPECT_EQ(type.free_rank, 8 - oracle::rank_over_q(m));
  for (std::int64_t p : {2, 3, 5}) {
    std::size_t divisible = 0;
    for (const auto& d : type.torsion_invariants) divisible += (d % p == 0) ? 1 : 0;
    EXPECT_EQ(type.free_rank + divisible, 8 - oracle::rank_mod_p(m, p)) << "p=" << p;
  }
}

TEST(Cokernel, InvariantUnderRedundantColumns) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix m = oracle::random_matrix(rng, 4, 3, -5, 5);
    const IntMatrix x = oracle::random_matrix(rng, 3, 1, -3, 3);
    EXPECT_EQ(cokernel_type(m), cokernel_type(m.hconcat(m * x)));
  }
}

TEST(Kernel, BasisIsSaturatedAndComplete) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix m = oracle::random_matrix(rng, 3, 5, -4, 4);
    const IntMatrix k = kernel_basis(m);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(k.cols(), 5 - oracle::rank_over_q(m));
    // Saturated: the kernel lattice has trivial cokernel torsion.
    EXPECT_TRUE(cokernel_type(k).torsion_invariants.empty());
  }
}

TEST(Unimodular, InverseRoundTrip) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const IntMatrix u = oracle::random_unimodular(rng, 5, 25);
    EXPECT_TRUE((u * unimodular_inverse(u)).is_identity());
  }
  EXPECT_THROW(unimodular_inverse(IntMatrix{{2}}), InputError);
}

TEST(LatticeClass, ContainsCoordinatesReduce) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix g = oracle::random_matrix(rng, 4, 3, -4, 4);
    const Lattice l = Lattice::span(g);
    const IntMatrix x = oracle::random_matrix(rng, 3, 1, -3, 3);
    const IntVector v = g * x.column(0);
    ASSERT_TRUE(l.contains(v));
    const auto c = l.coordinates(v);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(l.basis() * *c, v);

    std::uniform_int_distribution<int> e(-6, 6);
    IntVector w(4);
    for (auto& y : w) y = e(rng);
    const IntVector r = l.reduce(w);
    IntVector diff(4);
    for (std::size_t i = 0; i < 4; ++i) diff[i] = w[i] - r[i];
    EXPECT_TRUE(l.contains(diff));
    // Canonical: reducing a shifted copy lands on the same representative.
    IntVector shifted(4);
    for (std::size_t i = 0; i < 4; ++i) shifted[i] = w[i] + v[i];
    EXPECT_EQ(l.reduce(shifted), r);
  }
}

TEST(LatticeClass, SaturationAndPreimage) {
  const Lattice l = Lattice::span(IntMatrix{{2, 0}, {0, 4}, {0, 0}});
  EXPECT_EQ(l.saturated(), Lattice::span(IntMatrix{{1, 0}, {0, 1}, {0, 0}}));
  // phi = multiplication by 3 on Z^1 into the first coordinate; preimage of 2Z is 2Z.
  const IntMatrix phi{{3}, {0}, {0}};
  EXPECT_EQ(l.preimage(phi), (IntMatrix{{2}}));
}

IntMatrix generic_preimage(const Lattice& l, const IntMatrix& phi) {
  IntMatrix neg = l.basis();
  for (std::size_t r = 0; r < neg.rows(); ++r) {
    for (std::size_t c = 0; c < neg.cols(); ++c) neg(r, c) = -neg(r, c);
  }
  return image_basis(kernel_basis(phi.hconcat(neg)).row_block(0, phi.cols()));
}

TEST(LatticeClass, ModularPathsAgreeWithGenericHermite) {
  std::mt19937_64 rng(31);
  const long primes[] = {2, 3, 5, 7, 6, 4};
  for (int trial = 0; trial < 120; ++trial) {
    const long p = primes[trial % 6];
    const std::size_t n = 2 + trial % 5, k = 1 + trial % 4;
    const IntMatrix g = oracle::random_matrix(rng, n, 1 + trial % 3, -6, 6);
    const IntMatrix gp = g.hconcat(IntMatrix::scalar(n, p));
    const Lattice l = Lattice::span(gp);
    ASSERT_EQ(l.basis(), image_basis(gp)) << "p=" << p;
    const IntMatrix phi = oracle::random_matrix(rng, n, k, -6, 6);
    const IntMatrix pre = l.preimage(phi);
    ASSERT_EQ(pre, generic_preimage(l, phi)) << "p=" << p;
    const IntMatrix img = phi * pre;
    for (std::size_t c = 0; c < img.cols(); ++c) EXPECT_TRUE(l.contains(img.column(c)));
  }
}

TEST(LatticeClass, PrimePivotsWithoutElementaryQuotient) {
  // Z^2 / L is cyclic of order 9 here, so the F_3 shortcut must not apply.
  const Lattice l = Lattice::span(IntMatrix{{3, 0}, {1, 3}});
  EXPECT_FALSE(l.contains(std::vector<Integer>{3, 0}));
  const IntMatrix phi{{1, 2}, {0, 1}};
  EXPECT_EQ(l.preimage(phi), generic_preimage(l, phi));
}

}  // namespace
}  // namespace cuphom
