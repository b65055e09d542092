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

// Orbit enumeration for finite modules. Membership in a relation lattice
// L >= m Z^r, m squarefree, is decided one prime at a time with F_p row
// reduction (Z^r / L splits by CRT), never through the Hermite solver.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "cuphom/umodule.hpp"
#include "oracles.hpp"

namespace cuphom::oracle {

inline std::vector<std::int64_t> prime_factors_squarefree(std::int64_t m) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      ps.push_back(p);
      m /= p;
      if (m % p == 0) return {};  // not squarefree
    }
  }
  if (m > 1) ps.push_back(m);
  return ps;
}

/// Row-reduced span over F_p with a membership test.
class SpanModP {
 public:
  SpanModP(const IntMatrix& generators, std::int64_t p) : p_(p) {
    std::vector<Row> rows(generators.cols(), Row(generators.rows()));
    for (std::size_t c = 0; c < generators.cols(); ++c) {
      for (std::size_t r = 0; r < generators.rows(); ++r) rows[c][r] = mod(generators(r, c), p);
    }
    rank_ = eliminate_mod_p(rows, p);
    rows.resize(rank_);
    basis_ = std::move(rows);
    for (const auto& row : basis_) {
      std::size_t lead = 0;
      while (row[lead] == 0) ++lead;
      leads_.push_back(lead);
    }
    dim_ = generators.rows();
  }

  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return dim_; }

  bool contains(const IntVector& v) const {
    Row w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = mod(v[i], p_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const std::int64_t f = w[leads_[k]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = ((w[i] - f * basis_[k][i]) % p_ + p_) % p_;
    }
    for (auto x : w) {
      if (x != 0) return false;
    }
    return true;
  }

 private:
  std::int64_t p_;
  std::size_t rank_ = 0, dim_ = 0;
  std::vector<Row> basis_;
  std::vector<std::size_t> leads_;
};

class FiniteModuleOracle {
 public:
  /// Module over Z/m, m squarefree.
  explicit FiniteModuleOracle(const PresentedUModule& m) : module_(m) {
    modulus_ = m.ring.modulus();
    for (auto p : prime_factors_squarefree(modulus_)) {
      spans_.emplace_back(m.relations.basis(), p);
      primes_.push_back(p);
    }
    for (std::size_t k = 0; k < spans_.size(); ++k) {
      order_log2_ += static_cast<double>(m.ambient_rank - spans_[k].rank()) * std::log2(static_cast<double>(primes_[k]));
    }
  }

  double order_log2() const { return order_log2_; }

  bool is_zero(const IntVector& v) const {
    for (const auto& s : spans_) {
      if (!s.contains(v)) return false;
    }
    return true;
  }

  /// Least k >= 1 with U^k x = x, by walking the orbit; nullopt past `cap`.
  std::optional<std::int64_t> orbit_period(const IntVector& x, std::int64_t cap) const {
    const IntMatrix& u = module_.u_matrix();
    IntVector y = x;
    for (std::int64_t k = 1; k <= cap; ++k) {
      y = u * y;
      for (auto& e : y) e = Integer(mod(e, modulus_));
      IntVector diff(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - x[i];
      if (is_zero(diff)) return k;
    }
    return std::nullopt;
  }

 private:
  const PresentedUModule& module_;
  std::int64_t modulus_ = 0;
  std::vector<SpanModP> spans_;
  std::vector<std::int64_t> primes_;
  double order_log2_ = 0;
};

}  // namespace cuphom::oracle
