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

#include "cuphom/field_engine.hpp"

#include <algorithm>
#include <sstream>

namespace cuphom {

namespace {

std::size_t degree(const LaurentPoly& p) { return static_cast<std::size_t>(p.max_exponent()); }

// Strip powers of T and scale to monic.
LaurentPoly normalized(const LaurentPoly& p) { return make_monic(unit_normalize(p).first); }

class Work {
 public:
  Work(const PolyMatrix& m, const CoeffRing& field) : rows_(m.rows()), cols_(m.cols()), a_(m.rows() * m.cols(), LaurentPoly(field)) {
    for (std::size_t c = 0; c < cols_; ++c) {
      LaurentPoly::Exponent lo = 0;
      bool any = false;
      for (std::size_t r = 0; r < rows_; ++r) {
        LaurentPoly v = m(r, c).over(field);
        if (!v.is_zero()) {
          lo = any ? std::min(lo, v.min_exponent()) : v.min_exponent();
          any = true;
        }
        at(r, c) = std::move(v);
      }
      if (any && lo < 0) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, c) = at(r, c).shifted(-lo);
      }
    }
  }

  LaurentPoly& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  PolySmith run() {
    PolySmith out;
    std::vector<LaurentPoly> diag;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) {
      if (!settle_pivot(k)) break;
      diag.push_back(at(k, k));
    }
    out.rank = diag.size();
    // Enforce divisibility: diag(a, b) ~ diag(gcd, lcm).
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        const LaurentPoly g = poly_gcd(diag[i], diag[j]).g;
        const LaurentPoly l = poly_divmod(diag[i] * diag[j], g).first;
        diag[i] = g;
        diag[j] = l;
      }
    }
    for (auto& d : diag) d = make_monic(d);
    out.invariant_factors = std::move(diag);
    return out;
  }

 private:
  // Move a minimal-degree entry of the trailing block to (k, k) and clear its
  // row and column; false when the trailing block is zero.
  bool settle_pivot(std::size_t k) {
    while (true) {
      std::size_t pr = rows_, pc = cols_;
      for (std::size_t r = k; r < rows_; ++r) {
        for (std::size_t c = k; c < cols_; ++c) {
          if (at(r, c).is_zero()) continue;
          if (pr == rows_ || degree(at(r, c)) < degree(at(pr, pc))) pr = r, pc = c;
        }
      }
      if (pr == rows_) return false;
      swap_rows(k, pr);
      swap_cols(k, pc);
      bool clean = true;
      for (std::size_t r = k + 1; r < rows_; ++r) {
        if (at(r, k).is_zero()) continue;
        const auto [q, rem] = poly_divmod(at(r, k), at(k, k));
        for (std::size_t c = k; c < cols_; ++c) {
          if (!at(k, c).is_zero()) at(r, c) -= q * at(k, c);
        }
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t c = k + 1; c < cols_; ++c) {
        if (at(k, c).is_zero()) continue;
        const auto [q, rem] = poly_divmod(at(k, c), at(k, k));
        for (std::size_t r = k; r < rows_; ++r) {
          if (!at(r, k).is_zero()) at(r, c) -= q * at(r, k);
        }
        if (!rem.is_zero()) clean = false;
      }
      if (clean) return true;
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
  }

  std::size_t rows_, cols_;
  std::vector<LaurentPoly> a_;
};

void require_field(const CoeffRing& field) {
  if (!field.is_field()) throw InputError("field engine needs Q or Z/p, got " + field.name());
}

FieldModuleType from_factors(std::size_t free_rank, const std::vector<LaurentPoly>& factors) {
  FieldModuleType out;
  out.free_rank = free_rank;
  for (const auto& f : factors) {
    LaurentPoly g = normalized(f);
    if (!g.is_one()) out.torsion.push_back(std::move(g));
  }
  return out;
}

}  // namespace

PolySmith poly_smith_form(const PolyMatrix& m, const CoeffRing& field) {
  require_field(field);
  return Work(m, field).run();
}

std::string FieldModuleType::to_string() const {
  std::ostringstream os;
  os << "free " << free_rank << ", torsion [";
  for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? ", " : "") << torsion[i].to_string();
  os << "]";
  return os.str();
}

FieldModuleType field_homology(const ChainComplex& cx, Parity parity, const CoeffRing& field) {
  require_field(field);
  std::vector<std::size_t> mid, other;
  if (parity == Parity::Total) {
    for (std::size_t g = 0; g < cx.size(); ++g) mid.push_back(g);
    other = mid;
  } else {
    const int p = parity == Parity::Even ? 0 : 1;
    mid = cx.generators_of_parity(p);
    other = cx.generators_of_parity(1 - p);
  }
  const PolyMatrix& d = cx.differential();
  const PolySmith out = poly_smith_form(d.submatrix(other, mid), field);
  const PolySmith in = poly_smith_form(d.submatrix(mid, other), field);
  return from_factors(mid.size() - out.rank - in.rank, in.invariant_factors);
}

FieldModuleType truncated_field_type(const PresentedUModule& m) {
  require_field(m.ring);
  const std::size_t r = m.ambient_rank;
  // After pruning, a field module has relations p * I (Z/p) or none (Q).
  const Integer p = m.ring.is_finite() ? Integer(static_cast<long>(m.ring.modulus())) : Integer(0);
  const IntMatrix& rel = m.relations.basis();
  if (rel.cols() != (p == 0 ? 0 : r)) throw std::logic_error("truncated_field_type: unexpected relation lattice");
  PolyMatrix char_matrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      LaurentPoly e = LaurentPoly::constant(Rational(-m.t_action(i, j)), m.ring);
      if (i == j) e += LaurentPoly::monomial(1, 1, m.ring);
      char_matrix(i, j) = e;
    }
  }
  return from_factors(0, poly_smith_form(char_matrix, m.ring).invariant_factors);
}

}  // namespace cuphom
