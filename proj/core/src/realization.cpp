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

#include "cuphom/realization.hpp"

namespace cuphom {

std::pair<IntVector, IntVector> dense_divmod(const IntVector& dividend, const IntVector& monic_divisor) {
  if (monic_divisor.empty() || monic_divisor.back() != 1) throw InputError("dense_divmod: divisor must be monic");
  const std::size_t dd = monic_divisor.size() - 1;
  IntVector rem = dividend;
  if (rem.size() <= dd) {
    rem.resize(dd);
    return {IntVector{}, rem};
  }
  IntVector quot(rem.size() - dd);
  for (std::size_t top = rem.size() - 1; top >= dd; --top) {
    const Integer c = rem[top];
    if (c != 0) {
      quot[top - dd] = c;
      for (std::size_t i = 0; i <= dd; ++i) {
        if (monic_divisor[i] != 0) mpz_submul(rem[top - dd + i].get_mpz_t(), c.get_mpz_t(), monic_divisor[i].get_mpz_t());
      }
    }
    if (top == dd) break;
  }
  rem.resize(dd);
  return {quot, rem};
}

TruncatedRing::TruncatedRing(std::int64_t n_value, int power) : n_(n_value), power_(power) {
  if (n_ < 1) throw InputError("TruncatedRing: N must be >= 1");
  if (power_ < 1) throw InputError("TruncatedRing: power must be >= 1");
  rank_ = static_cast<std::size_t>(n_) * static_cast<std::size_t>(power_);
  // (T^N - 1)^p by the binomial theorem.
  modulus_.assign(rank_ + 1, 0);
  Integer binom = 1;
  for (int k = 0; k <= power_; ++k) {
    const bool negative = (power_ - k) % 2 == 1;
    modulus_[static_cast<std::size_t>(k * n_)] = negative ? Integer(-binom) : binom;
    binom = binom * (power_ - k) / (k + 1);
  }
}

IntVector TruncatedRing::reduce(IntVector dense) const {
  if (dense.size() <= rank_) {
    dense.resize(rank_);
    return dense;
  }
  return dense_divmod(dense, modulus_).second;
}

IntVector TruncatedRing::times_t(const IntVector& a) const {
  IntVector out(rank_);
  for (std::size_t i = 0; i + 1 < rank_; ++i) out[i + 1] = a[i];
  const Integer& top = a[rank_ - 1];
  if (top != 0) {
    for (std::size_t i = 0; i < rank_; ++i) {
      if (modulus_[i] != 0) mpz_submul(out[i].get_mpz_t(), top.get_mpz_t(), modulus_[i].get_mpz_t());
    }
  }
  return out;
}

IntVector TruncatedRing::times_t_inverse(const IntVector& a) const {
  // T^-1 = -f0 * (f(T) - f0) / T with f0 = f(0) = +-1.
  const Integer& f0 = modulus_[0];
  IntVector out(rank_);
  for (std::size_t i = 1; i < rank_; ++i) out[i - 1] = a[i];
  if (a[0] != 0) {
    const Integer scale = -f0 * a[0];
    for (std::size_t i = 0; i < rank_; ++i) {
      if (modulus_[i + 1] != 0) mpz_addmul(out[i].get_mpz_t(), scale.get_mpz_t(), modulus_[i + 1].get_mpz_t());
    }
  }
  return out;
}

IntVector TruncatedRing::multiply(const IntVector& a, const IntVector& b) const {
  IntVector prod(2 * rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return reduce(std::move(prod));
}

IntVector TruncatedRing::element(const LaurentPoly& p) const {
  IntVector out(rank_);
  if (p.is_zero()) return out;
  if (!p.has_integer_coefficients()) throw InputError("TruncatedRing: coefficients must be integral");
  const auto lo = std::min<LaurentPoly::Exponent>(0, p.min_exponent());
  const auto hi = p.max_exponent();
  IntVector dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : p.terms()) dense[static_cast<std::size_t>(e - lo)] = c.get_num();
  out = reduce(std::move(dense));
  for (auto k = lo; k < 0; ++k) out = times_t_inverse(out);
  return out;
}

IntMatrix TruncatedRing::multiplication_matrix(const IntVector& a) const {
  IntMatrix m(rank_, rank_);
  IntVector col = a;
  for (std::size_t j = 0; j < rank_; ++j) {
    m.set_column(j, col);
    if (j + 1 < rank_) col = times_t(col);
  }
  return m;
}

IntMatrix TruncatedRing::multiplication_matrix(const LaurentPoly& p) const { return multiplication_matrix(element(p)); }

IntMatrix TruncatedRing::t_matrix() const { return multiplication_matrix(LaurentPoly::monomial(1, 1)); }

IntMatrix TruncatedRing::t_inverse_matrix() const { return multiplication_matrix(LaurentPoly::monomial(1, -1)); }

IntMatrix TruncatedRing::realize(const PolyMatrix& pm) const {
  IntMatrix out(pm.rows() * rank_, pm.cols() * rank_);
  for (std::size_t r = 0; r < pm.rows(); ++r) {
    for (std::size_t c = 0; c < pm.cols(); ++c) {
      if (pm(r, c).is_zero()) continue;
      const IntMatrix block = multiplication_matrix(pm(r, c));
      for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = 0; j < rank_; ++j) out(r * rank_ + i, c * rank_ + j) = block(i, j);
      }
    }
  }
  return out;
}

namespace {

IntMatrix block_diagonal(const IntMatrix& block, std::size_t copies) {
  const std::size_t d = block.rows();
  IntMatrix out(d * copies, d * copies);
  for (std::size_t g = 0; g < copies; ++g) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) out(g * d + i, g * d + j) = block(i, j);
    }
  }
  return out;
}

}  // namespace

Realization truncated_realization(const ChainComplex& cx, int power) {
  TruncatedRing ring(cx.spec().n_value(), power);
  const std::size_t total = cx.size() * ring.rank();
  IntMatrix d1 = ring.realize(cx.d1());
  IntMatrix d3 = ring.realize(cx.d3());
  IntMatrix differential = d1 + d3;
  IntMatrix modulus_relations = cx.spec().ring().is_finite()
                                    ? IntMatrix::scalar(total, Integer(static_cast<long>(cx.spec().ring().modulus())))
                                    : IntMatrix(total, 0);
  return Realization{ring,
                     cx.size(),
                     std::move(d1),
                     std::move(d3),
                     std::move(differential),
                     block_diagonal(ring.t_matrix(), cx.size()),
                     block_diagonal(ring.t_inverse_matrix(), cx.size()),
                     std::move(modulus_relations)};
}

}  // namespace cuphom
