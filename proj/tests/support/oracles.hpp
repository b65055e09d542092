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

// Independent reference computations used by the tests. Nothing here calls
// into the normal-form code: ranks are taken over F_p by plain elimination,
// membership by enumeration, products by schoolbook loops.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "cuphom/int_matrix.hpp"
#include "cuphom/laurent.hpp"

namespace cuphom::oracle {

using Row = std::vector<std::int64_t>;

inline std::int64_t mod(const Integer& x, std::int64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2, b = a % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Row-reduce an F_p matrix in place; returns the rank.
inline std::size_t eliminate_mod_p(std::vector<Row>& a, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = inv_mod(a[rank][c], p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline std::vector<Row> to_mod_p(const IntMatrix& m, std::int64_t p) {
  std::vector<Row> a(m.rows(), Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = mod(m(r, c), p);
  }
  return a;
}

inline std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  auto a = to_mod_p(m, p);
  return eliminate_mod_p(a, p);
}

/// Rank over Q, by elimination over a large prime that divides no minor of
/// the small test matrices.
inline std::size_t rank_over_q(const IntMatrix& m) { return rank_mod_p(m, 1000000007LL); }

/// Schoolbook product of Laurent polynomials on a dense exponent window.
inline LaurentPoly schoolbook(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.ring());
  const auto lo_a = a.min_exponent(), lo_b = b.min_exponent();
  std::vector<Rational> da(a.max_exponent() - lo_a + 1), db(b.max_exponent() - lo_b + 1);
  for (std::size_t i = 0; i < da.size(); ++i) da[i] = a.coefficient(lo_a + static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < db.size(); ++i) db[i] = b.coefficient(lo_b + static_cast<std::int64_t>(i));
  std::vector<Rational> out(da.size() + db.size() - 1);
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) out[i + j] += da[i] * db[j];
  }
  LaurentPoly::Terms terms;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] != 0) terms[lo_a + lo_b + static_cast<std::int64_t>(k)] = out[k];
  }
  return LaurentPoly(a.ring(), terms);
}

/// Membership in the lattice spanned by linearly independent columns of M:
/// Gauss-Jordan over Q, then integrality of the unique solution. nullopt when
/// v is outside the Q-span or the solution is fractional.
inline std::optional<IntVector> rational_solve_member(const IntMatrix& m, const IntVector& v) {
  const std::size_t rows = m.rows(), n = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n] = v[r];
  }
  std::vector<std::size_t> pivot_row(n, rows);
  std::size_t r0 = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = r0;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) throw std::invalid_argument("rational_solve_member: dependent columns");
    std::swap(a[p], a[r0]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == r0 || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[r0][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[r0][k];
    }
    pivot_row[c] = r0++;
  }
  for (std::size_t r = r0; r < rows; ++r) {
    if (a[r][n] != 0) return std::nullopt;
  }
  IntVector x(n);
  for (std::size_t c = 0; c < n; ++c) {
    const Rational q = a[pivot_row[c]][n] / a[pivot_row[c]][c];
    if (q.get_den() != 1) return std::nullopt;
    x[c] = q.get_num();
  }
  return x;
}

/// Search coefficient vectors in [-bound, bound]^cols with M x = v.
inline std::optional<IntVector> brute_force_member(const IntMatrix& m, const IntVector& v, int bound) {
  const std::size_t n = m.cols();
  std::vector<int> x(n, -bound);
  if (n == 0) {
    return std::all_of(v.begin(), v.end(), [](const Integer& e) { return e == 0; }) ? std::optional<IntVector>(IntVector{})
                                                                                     : std::nullopt;
  }
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < m.rows() && ok; ++r) {
      Integer s = 0;
      for (std::size_t c = 0; c < n; ++c) s += m(r, c) * x[c];
      ok = s == v[r];
    }
    if (ok) {
      IntVector w(n);
      for (std::size_t c = 0; c < n; ++c) w[c] = x[c];
      return w;
    }
    std::size_t k = 0;
    while (k < n && x[k] == bound) x[k++] = -bound;
    if (k == n) return std::nullopt;
    ++x[k];
  }
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

/// Product of random elementary column operations; determinant +-1 by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> k(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) {
      u.negate_column(a);
    } else {
      u.add_column_multiple(a, b, k(rng));
    }
  }
  return u;
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, CoeffRing ring, int max_terms, int lo, int hi, int cmin = -3,
                                  int cmax = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(lo, hi), coeff(cmin, cmax);
  LaurentPoly::Terms t;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) t[exp(rng)] += coeff(rng);
  for (auto it = t.begin(); it != t.end();) it = (it->second == 0) ? t.erase(it) : std::next(it);
  return LaurentPoly(ring, t);
}

}  // namespace cuphom::oracle
