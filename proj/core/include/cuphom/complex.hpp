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
 * @file complex.hpp
 * @brief The model complex (C, d1 + d3) over R[T, T^-1].
 *
 * Generators are e_S for subsets S of {1..b1}, ordered by |S| (the Morse
 * index) and then lexicographically. Matrices act on column vectors: the
 * column of a generator holds its image.
 *
 *   d1(e_S) = sum_{i in S} (-1)^{#{j in S : j < i}} (T^{xi_i} - 1) e_{S - i}
 *   d3      = -T sum_{i<j<k} mu_{ijk} c_k c_j c_i      (c_i = contraction by i)
 *
 * With xi = (N, 0, 0) and b1 = 3 the block of d1 + d3 from {e_1 ^ e_W} to
 * {e_W} is the 4x4 matrix with diagonal T^N - 1 and corner -mT.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuphom/laurent.hpp"
#include "cuphom/manifold.hpp"

namespace cuphom {

/// Dense matrix of Laurent polynomials with integer coefficients.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Apply e -> scale * e to every exponent (scale = -1 swaps T and T^-1).
  PolyMatrix substituted(LaurentPoly::Exponent scale) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

/// Subset bitmask: bit (i - 1) set iff index i belongs to S.
using Subset = std::uint32_t;

class ChainComplex {
 public:
  ChainComplex(ManifoldSpec spec, PolyMatrix d1, PolyMatrix d3);

  const ManifoldSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return subsets_.size(); }

  Subset subset(std::size_t g) const { return subsets_.at(g); }
  int morse_index(std::size_t g) const;
  std::size_t index_of(Subset s) const;
  std::vector<std::size_t> generators_of_degree(int degree) const;
  /// parity 0: even Morse index, 1: odd.
  std::vector<std::size_t> generators_of_parity(int parity) const;
  std::string generator_name(std::size_t g) const;

  const PolyMatrix& d1() const noexcept { return d1_; }
  const PolyMatrix& d3() const noexcept { return d3_; }
  const PolyMatrix& differential() const noexcept { return total_; }

 private:
  ManifoldSpec spec_;
  std::vector<Subset> subsets_;
  std::vector<std::size_t> position_;  // indexed by Subset
  PolyMatrix d1_;
  PolyMatrix d3_;
  PolyMatrix total_;
};

/// Generator order for b1: by popcount, then lexicographic on sorted indices.
std::vector<Subset> generator_order(int b1);

/// Koszul part only (d3 = 0).
ChainComplex build_d1(const ManifoldSpec& spec);
/// The cup-product contraction matrix for spec, in generator order.
PolyMatrix build_d3(const ManifoldSpec& spec);
/// d1 + d3 with the contraction d3.
ChainComplex build_complex(const ManifoldSpec& spec);
/// d1 + custom_d3. custom_d3 must lower Morse index by exactly 3 and satisfy
/// (d1 + d3)^2 = 0; otherwise InputError.
ChainComplex build_complex(const ManifoldSpec& spec, const PolyMatrix& custom_d3);

/// [[T^N-1, 0, 0, -mT], [0, T^N-1, 0, 0], [0, 0, T^N-1, 0], [0, 0, 0, T^N-1]]
PolyMatrix assemble_paper_matrix(std::int64_t n, std::int64_t m);

/// Block of the differential from {e_1 ^ e_W} to {e_W}, W over subsets of
/// {2, 3} in generator order. Needs b1 = 3 and xi = (N, 0, 0).
PolyMatrix collapse_to_paper_form(const ChainComplex& cx);

}  // namespace cuphom
