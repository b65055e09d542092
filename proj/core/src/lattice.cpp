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

#include "cuphom/lattice.hpp"

#include <cstdint>
#include <vector>

#include "cuphom/normal_form.hpp"

namespace cuphom {

namespace {

using Word = std::int64_t;
constexpr Word kMaxModulus = Word{1} << 31;

Word residue(const Integer& v, Word p) {
  return static_cast<Word>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

Word inverse_mod(Word a, Word p) {
  Word r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Word q = r0 / r1;
    Word t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return ((s0 % p) + p) % p;
}

bool small_prime(const Integer& p) {
  return p > 1 && p < kMaxModulus && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

// Reduced row echelon form over F_p of a row-major nrows x ncols array; returns pivot columns.
std::vector<std::size_t> rref_mod(std::vector<Word>& a, std::size_t nrows, std::size_t ncols, Word p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t s = r;
    while (s < nrows && a[s * ncols + c] == 0) ++s;
    if (s == nrows) continue;
    if (s != r) {
      for (std::size_t j = c; j < ncols; ++j) std::swap(a[s * ncols + j], a[r * ncols + j]);
    }
    const Word inv = inverse_mod(a[r * ncols + c], p);
    for (std::size_t j = c; j < ncols; ++j) a[r * ncols + j] = a[r * ncols + j] * inv % p;
    for (std::size_t i = 0; i < nrows; ++i) {
      const Word f = a[i * ncols + c];
      if (i == r || f == 0) continue;
      for (std::size_t j = c; j < ncols; ++j) {
        a[i * ncols + j] = (a[i * ncols + j] + (p - f) * a[r * ncols + j]) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Hermite basis of lift(W) + pZ^k for W spanned by `count` rows of length k.
IntMatrix hermite_of_subspace(std::vector<Word> rows, std::size_t count, std::size_t k, Word p) {
  const std::vector<std::size_t> pivots = rref_mod(rows, count, k, p);
  IntMatrix h(k, k);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (next < pivots.size() && pivots[next] == i) {
      for (std::size_t j = i; j < k; ++j) h(j, i) = rows[next * k + j];
      ++next;
    } else {
      h(i, i) = p;
    }
  }
  return h;
}

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

Lattice Lattice::span(const IntMatrix& generators) {
  Lattice out(generators.rows());
  if (generators.cols() == 0) return out;
  // Generators containing p*e_i for every i: work in F_p^n.
  const std::size_t n = generators.rows();
  std::optional<Integer> p;
  std::vector<bool> covered(n, false);
  std::vector<std::size_t> rest;
  std::size_t n_covered = 0;
  for (std::size_t c = 0; c < generators.cols(); ++c) {
    std::size_t nz = 0, at = 0;
    for (std::size_t i = 0; i < n && nz < 2; ++i) {
      if (generators(i, c) != 0) {
        ++nz;
        at = i;
      }
    }
    if (nz == 1 && generators(at, c) > 1 && (!p || *p == generators(at, c))) {
      p = generators(at, c);
      if (!covered[at]) ++n_covered;
      covered[at] = true;
    } else if (nz > 0) {
      rest.push_back(c);
    }
  }
  if (n > 0 && n_covered == n && small_prime(*p)) {
    const Word q = p->get_si();
    std::vector<Word> rows(rest.size() * n);
    for (std::size_t r = 0; r < rest.size(); ++r) {
      for (std::size_t i = 0; i < n; ++i) rows[r * n + i] = residue(generators(i, rest[r]), q);
    }
    out.basis_ = hermite_of_subspace(std::move(rows), rest.size(), n, q);
    out.pivot_rows_ = all_rows(n);
    return out;
  }
  const HermiteResult h = hermite_normal_form(generators, false);
  out.basis_ = h.H.column_block(0, h.rank);
  out.pivot_rows_ = h.pivot_rows;
  return out;
}

bool Lattice::contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

std::optional<IntVector> Lattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != dim_) throw InputError("Lattice: vector length mismatch");
  IntVector residual(v.begin(), v.end());
  IntVector coords(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t pr = pivot_rows_[k];
    for (std::size_t i = (k == 0 ? 0 : pivot_rows_[k - 1] + 1); i < pr; ++i) {
      if (residual[i] != 0) return std::nullopt;
    }
    const Integer& pivot = basis_(pr, k);
    if (mpz_divisible_p(residual[pr].get_mpz_t(), pivot.get_mpz_t()) == 0) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), residual[pr].get_mpz_t(), pivot.get_mpz_t());
    if (c != 0) {
      for (std::size_t i = pr; i < dim_; ++i) {
        const Integer& b = basis_(i, k);
        if (b != 0) mpz_submul(residual[i].get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
      }
    }
    coords[k] = std::move(c);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

IntVector Lattice::reduce(std::span<const Integer> v) const {
  if (v.size() != dim_) throw InputError("Lattice: vector length mismatch");
  IntVector out(v.begin(), v.end());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t pr = pivot_rows_[k];
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), out[pr].get_mpz_t(), basis_(pr, k).get_mpz_t());
    if (q == 0) continue;
    for (std::size_t i = pr; i < dim_; ++i) {
      const Integer& b = basis_(i, k);
      if (b != 0) mpz_submul(out[i].get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
    }
  }
  return out;
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (other.dim_ != dim_) throw InputError("Lattice sum: dimension mismatch");
  if (rank() == 0) return other;
  if (other.rank() == 0) return *this;
  return span(basis_.hconcat(other.basis_));
}

Lattice Lattice::saturated() const {
  if (rank() == 0 || rank() == dim_) {
    return rank() == dim_ ? full(dim_) : *this;
  }
  // Left kernel K of the basis; the saturation is the integer kernel of K^T.
  const IntMatrix left = kernel_basis(basis_.transpose());
  return span(kernel_basis(left.transpose()));
}

std::optional<Word> Lattice::elementary_modulus() const {
  if (dim_ == 0 || rank() != dim_) return std::nullopt;
  std::optional<Integer> p;
  for (std::size_t k = 0; k < dim_; ++k) {
    const Integer& pivot = basis_(k, k);
    if (pivot == 1) continue;
    if (p && *p != pivot) return std::nullopt;
    for (std::size_t i = k + 1; i < dim_; ++i) {
      if (basis_(i, k) != 0) return std::nullopt;
    }
    p = pivot;
  }
  if (!p || !small_prime(*p)) return std::nullopt;
  return p->get_si();
}

IntMatrix Lattice::preimage(const IntMatrix& phi) const {
  if (phi.rows() != dim_) throw InputError("Lattice::preimage: dimension mismatch");
  const std::size_t k = phi.cols();
  if (k == 0) return IntMatrix(0, 0);
  if (const auto p = elementary_modulus()) {
    // Kernel of [phi | B'] over F_p, B' the unit-pivot columns, projected to the first k coordinates.
    std::vector<std::size_t> unit_cols;
    for (std::size_t c = 0; c < rank(); ++c) {
      if (basis_(c, c) == 1) unit_cols.push_back(c);
    }
    const std::size_t n = dim_, w = k + unit_cols.size();
    std::vector<Word> a(n * w);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < k; ++c) a[i * w + c] = residue(phi(i, c), *p);
      for (std::size_t c = 0; c < unit_cols.size(); ++c) a[i * w + k + c] = residue(basis_(i, unit_cols[c]), *p);
    }
    const std::vector<std::size_t> pivots = rref_mod(a, n, w, *p);
    std::vector<bool> is_pivot(w, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<Word> rows;
    std::size_t count = 0;
    for (std::size_t f = 0; f < k; ++f) {
      if (is_pivot[f]) continue;
      // Free variables beyond k only contribute through pivots in the first k coordinates.
      std::vector<Word> v(k, 0);
      v[f] = 1;
      for (std::size_t r = 0; r < pivots.size() && pivots[r] < k; ++r) v[pivots[r]] = (*p - a[r * w + f]) % *p;
      rows.insert(rows.end(), v.begin(), v.end());
      ++count;
    }
    for (std::size_t f = k; f < w; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Word> v(k, 0);
      bool nonzero = false;
      for (std::size_t r = 0; r < pivots.size() && pivots[r] < k; ++r) {
        v[pivots[r]] = (*p - a[r * w + f]) % *p;
        nonzero |= v[pivots[r]] != 0;
      }
      if (!nonzero) continue;
      rows.insert(rows.end(), v.begin(), v.end());
      ++count;
    }
    return hermite_of_subspace(std::move(rows), count, k, *p);
  }
  // Kernel of [phi | -B] projected to its first k coordinates.
  IntMatrix neg_basis = basis_;
  for (std::size_t r = 0; r < neg_basis.rows(); ++r) {
    for (std::size_t c = 0; c < neg_basis.cols(); ++c) neg_basis(r, c) = -neg_basis(r, c);
  }
  const IntMatrix ker = kernel_basis(phi.hconcat(neg_basis));
  const IntMatrix top = ker.row_block(0, k);
  return image_basis(top);
}

}  // namespace cuphom
