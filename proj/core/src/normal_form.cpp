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

#include "cuphom/normal_form.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace cuphom {
namespace {

#ifdef CUPHOM_CHECK_POSTCONDITIONS
std::atomic<bool> g_audit{true};
#else
std::atomic<bool> g_audit{false};
#endif
std::atomic<std::size_t> g_hermite_checks{0};
std::atomic<std::size_t> g_smith_checks{0};

// row dst -= q * row src
void row_submul(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  auto d = a.row(dst);
  auto s = a.row(src);
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (mpz_sgn(s[c].get_mpz_t()) != 0) mpz_submul(d[c].get_mpz_t(), q.get_mpz_t(), s[c].get_mpz_t());
  }
}

// column dst -= q * column src
void col_submul(IntMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Integer& s = a(r, src);
    if (mpz_sgn(s.get_mpz_t()) != 0) mpz_submul(a(r, dst).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool is_unimodular(const IntMatrix& u) {
  const Integer d = determinant(u);
  return d == 1 || d == -1;
}

void audit_hermite(const IntMatrix& m, const HermiteResult& r) {
  if (!(m * r.U == r.H)) throw std::logic_error("HNF audit: M*U != H");
  if (!is_unimodular(r.U)) throw std::logic_error("HNF audit: U not unimodular");
  for (std::size_t k = 0; k < r.rank; ++k) {
    const std::size_t pr = r.pivot_rows[k];
    if (r.H(pr, k) <= 0) throw std::logic_error("HNF audit: non-positive pivot");
    for (std::size_t i = 0; i < pr; ++i) {
      if (r.H(i, k) != 0) throw std::logic_error("HNF audit: nonzero entry above pivot");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (r.H(pr, j) < 0 || r.H(pr, j) >= r.H(pr, k)) {
        throw std::logic_error("HNF audit: off-pivot entry not reduced");
      }
    }
    if (k > 0 && pr <= r.pivot_rows[k - 1]) throw std::logic_error("HNF audit: not echelon");
  }
  for (std::size_t k = r.rank; k < r.H.cols(); ++k) {
    if (!is_zero(r.H.column(k))) throw std::logic_error("HNF audit: nonzero column beyond rank");
  }
  ++g_hermite_checks;
}

void audit_smith(const IntMatrix& m, const SmithResult& r) {
  if (!(r.P * m * r.Q == r.S)) throw std::logic_error("SNF audit: P*M*Q != S");
  if (!is_unimodular(r.P) || !is_unimodular(r.Q)) throw std::logic_error("SNF audit: transform not unimodular");
  const auto diag = r.diagonal();
  for (std::size_t i = 0; i < r.S.rows(); ++i) {
    for (std::size_t j = 0; j < r.S.cols(); ++j) {
      if (i != j && r.S(i, j) != 0) throw std::logic_error("SNF audit: off-diagonal entry");
    }
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) throw std::logic_error("SNF audit: negative diagonal entry");
    if (i + 1 < diag.size()) {
      const Integer& a = diag[i];
      const Integer& b = diag[i + 1];
      const bool divides = a == 0 ? b == 0 : mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
      if (!divides) throw std::logic_error("SNF audit: divisibility chain broken");
    }
  }
  ++g_smith_checks;
}

}  // namespace

void NormalFormAudit::enable(bool on) noexcept { g_audit = on; }
bool NormalFormAudit::enabled() noexcept { return g_audit; }
std::size_t NormalFormAudit::hermite_checks() noexcept { return g_hermite_checks; }
std::size_t NormalFormAudit::smith_checks() noexcept { return g_smith_checks; }
void NormalFormAudit::reset_counters() noexcept {
  g_hermite_checks = 0;
  g_smith_checks = 0;
}

std::vector<Integer> SmithResult::diagonal() const {
  std::vector<Integer> d;
  const std::size_t n = std::min(S.rows(), S.cols());
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(S(i, i));
  return d;
}

Integer AbelianGroupType::order() const {
  Integer n = 1;
  for (const auto& d : torsion_invariants) n *= d;
  return n;
}

std::string AbelianGroupType::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& d : torsion_invariants) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Same elimination as hermite_big on machine words; nullopt on any overflow.
std::optional<HermiteResult> hermite_word(const IntMatrix& m, bool track_u) {
  using W = std::int64_t;
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  std::vector<W> ht(n * rows), ut(track_u ? n * n : 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& v = m(i, j);
      if (!v.fits_slong_p()) return std::nullopt;
      ht[j * rows + i] = v.get_si();
    }
  }
  for (std::size_t j = 0; j < track_u * n; ++j) ut[j * n + j] = 1;
  auto mag = [](W v) { return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v); };
  bool overflow = false;
  auto submul = [&](std::vector<W>& a, std::size_t width, std::size_t dst, std::size_t src, W q) {
    W* d = a.data() + dst * width;
    const W* sr = a.data() + src * width;
    for (std::size_t c = 0; c < width; ++c) {
      if (sr[c] == 0) continue;
      W t;
      overflow |= __builtin_mul_overflow(q, sr[c], &t);
      overflow |= __builtin_sub_overflow(d[c], t, &d[c]);
    }
  };
  auto swap_rows = [](std::vector<W>& a, std::size_t width, std::size_t x, std::size_t y) {
    if (x != y) std::swap_ranges(a.begin() + x * width, a.begin() + (x + 1) * width, a.begin() + y * width);
  };
  auto floor_q = [&](W a, W b) -> W {
    if (b == -1) {
      overflow |= a == std::numeric_limits<W>::min();
      return overflow ? 0 : -a;
    }
    W q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
  };

  HermiteResult out;
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows && r < n; ++i) {
    bool has_pivot = false;
    while (true) {
      // Smallest entry; ties go to the sparsest row, which limits fill-in.
      std::size_t best = n, best_nnz = 0;
      for (std::size_t k = r; k < n; ++k) {
        const W v = ht[k * rows + i];
        if (v == 0) continue;
        if (best != n && mag(v) > mag(ht[best * rows + i])) continue;
        std::size_t nnz = 0;
        for (std::size_t c = i; c < rows; ++c) nnz += ht[k * rows + c] != 0;
        for (std::size_t c = 0; c < track_u * n; ++c) nnz += ut[k * n + c] != 0;
        if (best == n || mag(v) < mag(ht[best * rows + i]) || nnz < best_nnz) best = k, best_nnz = nnz;
      }
      if (best == n) break;
      has_pivot = true;
      swap_rows(ht, rows, r, best);
      if (track_u) swap_rows(ut, n, r, best);
      bool clean = true;
      for (std::size_t k = r + 1; k < n; ++k) {
        if (ht[k * rows + i] == 0) continue;
        const W q = floor_q(ht[k * rows + i], ht[r * rows + i]);
        submul(ht, rows, k, r, q);
        if (track_u) submul(ut, n, k, r, q);
        if (overflow) return std::nullopt;
        if (ht[k * rows + i] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (ht[r * rows + i] < 0) {
      for (std::size_t c = 0; c < rows; ++c) overflow |= __builtin_sub_overflow(W(0), ht[r * rows + c], &ht[r * rows + c]);
      for (std::size_t c = 0; c < track_u * n; ++c) overflow |= __builtin_sub_overflow(W(0), ut[r * n + c], &ut[r * n + c]);
      if (overflow) return std::nullopt;
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (ht[k * rows + i] == 0) continue;
      const W q = floor_q(ht[k * rows + i], ht[r * rows + i]);
      submul(ht, rows, k, r, q);
      if (track_u) submul(ut, n, k, r, q);
      if (overflow) return std::nullopt;
    }
    out.pivot_rows.push_back(i);
    ++r;
  }
  out.rank = r;
  out.H = IntMatrix(rows, n);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) out.H(i, j) = static_cast<long>(ht[j * rows + i]);
  if (track_u) {
    out.U = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.U(i, j) = static_cast<long>(ut[j * n + i]);
  }
  return out;
}

HermiteResult hermite_big(const IntMatrix& m, bool track_u) {
  // Work on the transpose so that column operations become contiguous row
  // operations: rows of `ht` are columns of H, rows of `ut` are columns of U.
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  IntMatrix ht = m.transpose();
  IntMatrix ut = track_u ? IntMatrix::identity(n) : IntMatrix(0, 0);

  HermiteResult out;
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows && r < n; ++i) {
    bool has_pivot = false;
    while (true) {
      std::size_t best = n, best_nnz = 0;
      for (std::size_t k = r; k < n; ++k) {
        const Integer& v = ht(k, i);
        if (mpz_sgn(v.get_mpz_t()) == 0) continue;
        const int cmp = best == n ? -1 : mpz_cmpabs(v.get_mpz_t(), ht(best, i).get_mpz_t());
        if (cmp > 0) continue;
        std::size_t nnz = 0;
        for (std::size_t c = i; c < rows; ++c) nnz += mpz_sgn(ht(k, c).get_mpz_t()) != 0;
        for (std::size_t c = 0; c < track_u * n; ++c) nnz += mpz_sgn(ut(k, c).get_mpz_t()) != 0;
        if (cmp < 0 || nnz < best_nnz) best = k, best_nnz = nnz;
      }
      if (best == n) break;
      has_pivot = true;
      ht.swap_rows(r, best);
      if (track_u) ut.swap_rows(r, best);
      bool clean = true;
      for (std::size_t k = r + 1; k < n; ++k) {
        if (mpz_sgn(ht(k, i).get_mpz_t()) == 0) continue;
        const Integer q = floor_div(ht(k, i), ht(r, i));
        row_submul(ht, k, r, q);
        if (track_u) row_submul(ut, k, r, q);
        if (mpz_sgn(ht(k, i).get_mpz_t()) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (ht(r, i) < 0) {
      ht.negate_row(r);
      if (track_u) ut.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (mpz_sgn(ht(k, i).get_mpz_t()) == 0) continue;
      const Integer q = floor_div(ht(k, i), ht(r, i));
      row_submul(ht, k, r, q);
      if (track_u) row_submul(ut, k, r, q);
    }
    out.pivot_rows.push_back(i);
    ++r;
  }
  out.rank = r;
  out.H = ht.transpose();
  if (track_u) out.U = ut.transpose();
  return out;
}

HermiteResult hermite_impl(const IntMatrix& m, bool need_u) {
  const bool track_u = need_u || g_audit;
  auto word = hermite_word(m, track_u);
  HermiteResult out = word ? std::move(*word) : hermite_big(m, track_u);
  if (g_audit) audit_hermite(m, out);
  return out;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m, bool with_transform) { return hermite_impl(m, with_transform); }

SmithResult smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix p = IntMatrix::identity(rows);
  IntMatrix q = IntMatrix::identity(cols);

  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    a.swap_rows(t, i);
    p.swap_rows(t, i);
    a.swap_columns(t, j);
    q.swap_columns(t, j);
  };

  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  for (; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block.
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (mpz_sgn(a(i, j).get_mpz_t()) == 0) continue;
        if (bi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) break;
    move_to_pivot(t, bi, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (mpz_sgn(a(i, t).get_mpz_t()) == 0) continue;
        const Integer k = floor_div(a(i, t), a(t, t));
        row_submul(a, i, t, k);
        row_submul(p, i, t, k);
        if (mpz_sgn(a(i, t).get_mpz_t()) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (mpz_sgn(a(t, j).get_mpz_t()) == 0) continue;
        const Integer k = floor_div(a(t, j), a(t, t));
        col_submul(a, j, t, k);
        col_submul(q, j, t, k);
        if (mpz_sgn(a(t, j).get_mpz_t()) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (mpz_sgn(a(i, t).get_mpz_t()) != 0 && mpz_cmpabs(a(i, t).get_mpz_t(), a(bi2, bj2).get_mpz_t()) < 0) {
            bi2 = i;
            bj2 = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_sgn(a(t, j).get_mpz_t()) != 0 && mpz_cmpabs(a(t, j).get_mpz_t(), a(bi2, bj2).get_mpz_t()) < 0) {
            bi2 = t;
            bj2 = j;
          }
        }
        move_to_pivot(t, bi2, bj2);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t()) == 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      a.add_row_multiple(t, bad, 1);
      p.add_row_multiple(t, bad, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      p.negate_row(t);
    }
  }

  SmithResult out{std::move(a), std::move(p), std::move(q), t};
  if (g_audit) audit_smith(m, out);
  return out;
}

MembershipResult lattice_membership(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.rows()) {
    throw InputError("lattice_membership: vector length " + std::to_string(v.size()) +
                     " != matrix rows " + std::to_string(m.rows()));
  }
  const HermiteResult h = hermite_normal_form(m);
  IntVector residual(v.begin(), v.end());
  IntVector y(m.cols());
  for (std::size_t k = 0; k < h.rank; ++k) {
    const std::size_t pr = h.pivot_rows[k];
    // Rows above this pivot are untouched by the remaining columns.
    for (std::size_t i = (k == 0 ? 0 : h.pivot_rows[k - 1] + 1); i < pr; ++i) {
      if (residual[i] != 0) return {};
    }
    if (mpz_divisible_p(residual[pr].get_mpz_t(), h.H(pr, k).get_mpz_t()) == 0) return {};
    Integer c;
    mpz_divexact(c.get_mpz_t(), residual[pr].get_mpz_t(), h.H(pr, k).get_mpz_t());
    for (std::size_t i = pr; i < m.rows(); ++i) residual[i] -= c * h.H(i, k);
    y[k] = std::move(c);
  }
  if (!is_zero(residual)) return {};
  MembershipResult out;
  out.member = true;
  out.witness = h.U * y;
  return out;
}

AbelianGroupType cokernel_type(const IntMatrix& m) {
  AbelianGroupType out;
  if (m.cols() == 0) {
    out.free_rank = m.rows();
    return out;
  }
  const SmithResult s = smith_normal_form(m);
  out.free_rank = m.rows() - s.rank;
  for (const auto& d : s.diagonal()) {
    if (d >= 2) out.torsion_invariants.push_back(d);
  }
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return IntMatrix::identity(n);
  const HermiteResult h = hermite_normal_form(m);
  IntMatrix k = h.U.column_block(h.rank, n - h.rank);
  if (k.cols() == 0) return k;
  // A Hermite basis of the kernel keeps entries small and deterministic.
  return image_basis(k);
}

IntMatrix image_basis(const IntMatrix& m) {
  if (m.cols() == 0) return m;
  const HermiteResult h = hermite_impl(m, false);
  return h.H.column_block(0, h.rank);
}

std::size_t rank(const IntMatrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  return hermite_impl(m, false).rank;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw InputError("unimodular_inverse: matrix not square");
  const HermiteResult h = hermite_normal_form(u);
  if (!h.H.is_identity()) throw InputError("unimodular_inverse: matrix is not unimodular");
  return h.U;
}

}  // namespace cuphom
