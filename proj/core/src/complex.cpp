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

#include "cuphom/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cuphom {

namespace {

void require_shape(const PolyMatrix& a, const PolyMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError(std::string(what) + ": shape mismatch");
}

int sign_below(Subset s, int i) {
  const Subset below = s & ((Subset{1} << (i - 1)) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

// Contraction by index i: e_S -> sign(i, S) e_{S - i}, or 0 when i is not in S.
std::optional<std::pair<Subset, int>> contract(Subset s, int i) {
  const Subset bit = Subset{1} << (i - 1);
  if ((s & bit) == 0) return std::nullopt;
  return std::make_pair(s & ~bit, sign_below(s, i));
}

}  // namespace

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = LaurentPoly::constant(1);
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  }
  return out;
}

PolyMatrix PolyMatrix::substituted(LaurentPoly::Exponent scale) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = poly_substitute(data_[i], scale);
  return out;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("PolyMatrix product: inner dimension mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const LaurentPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_shape(a, b, "PolyMatrix sum");
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  }
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_shape(a, b, "PolyMatrix difference");
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  }
  return out;
}

std::vector<Subset> generator_order(int b1) {
  if (b1 < 0 || b1 > 20) throw InputError("b1 out of supported range");
  std::vector<Subset> out(std::size_t{1} << b1);
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = static_cast<Subset>(s);
  auto key = [](Subset s) {
    std::vector<int> idx;
    for (int i = 0; s >> i; ++i) {
      if ((s >> i) & 1) idx.push_back(i);
    }
    return idx;
  };
  std::stable_sort(out.begin(), out.end(), [&](Subset a, Subset b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return key(a) < key(b);
  });
  return out;
}

ChainComplex::ChainComplex(ManifoldSpec spec, PolyMatrix d1, PolyMatrix d3)
    : spec_(std::move(spec)), subsets_(generator_order(spec_.b1())), d1_(std::move(d1)), d3_(std::move(d3)) {
  const std::size_t n = subsets_.size();
  if (d1_.rows() != n || d1_.cols() != n || d3_.rows() != n || d3_.cols() != n) {
    throw InputError("ChainComplex: differential has the wrong shape");
  }
  position_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) position_[subsets_[g]] = g;
  total_ = d1_ + d3_;
}

int ChainComplex::morse_index(std::size_t g) const { return std::popcount(subsets_.at(g)); }

std::size_t ChainComplex::index_of(Subset s) const {
  if (s >= position_.size()) throw InputError("ChainComplex: subset out of range");
  return position_[s];
}

std::vector<std::size_t> ChainComplex::generators_of_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < size(); ++g) {
    if (morse_index(g) == degree) out.push_back(g);
  }
  return out;
}

std::vector<std::size_t> ChainComplex::generators_of_parity(int parity) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < size(); ++g) {
    if (morse_index(g) % 2 == parity) out.push_back(g);
  }
  return out;
}

std::string ChainComplex::generator_name(std::size_t g) const {
  const Subset s = subset(g);
  if (s == 0) return "e_0";
  std::string out = "e_";
  for (int i = 1; i <= spec_.b1(); ++i) {
    if ((s >> (i - 1)) & 1) {
      if (out.size() > 2 && spec_.b1() > 9) out += ',';
      out += std::to_string(i);
    }
  }
  return out;
}

namespace {

PolyMatrix koszul_matrix(const ManifoldSpec& spec, const std::vector<Subset>& order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t g = 0; g < n; ++g) pos[order[g]] = g;
  PolyMatrix d(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (int i = 1; i <= spec.b1(); ++i) {
      const auto hit = contract(order[col], i);
      if (!hit) continue;
      const LaurentPoly w = LaurentPoly::t_power_minus_one(spec.xi()[i - 1]);
      if (w.is_zero()) continue;
      d(pos[hit->first], col) += w * Rational(hit->second);
    }
  }
  return d;
}

}  // namespace

PolyMatrix build_d3(const ManifoldSpec& spec) {
  const auto order = generator_order(spec.b1());
  const std::size_t n = order.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t g = 0; g < n; ++g) pos[order[g]] = g;
  PolyMatrix d(n, n);
  if (spec.cup3().empty()) return d;
  const LaurentPoly minus_t = LaurentPoly::monomial(-1, 1);
  for (std::size_t col = 0; col < n; ++col) {
    for (const auto& [idx, mu] : spec.cup3()) {
      // c_k c_j c_i: contract i first.
      Subset s = order[col];
      int sign = 1;
      bool alive = true;
      for (int which : {idx[0], idx[1], idx[2]}) {
        const auto hit = contract(s, which);
        if (!hit) {
          alive = false;
          break;
        }
        s = hit->first;
        sign *= hit->second;
      }
      if (!alive) continue;
      d(pos[s], col) += minus_t * Rational(mu * sign);
    }
  }
  return d;
}

ChainComplex build_d1(const ManifoldSpec& spec) {
  const auto order = generator_order(spec.b1());
  return ChainComplex(spec, koszul_matrix(spec, order), PolyMatrix(order.size(), order.size()));
}

ChainComplex build_complex(const ManifoldSpec& spec) {
  const auto order = generator_order(spec.b1());
  return ChainComplex(spec, koszul_matrix(spec, order), build_d3(spec));
}

ChainComplex build_complex(const ManifoldSpec& spec, const PolyMatrix& custom_d3) {
  const auto order = generator_order(spec.b1());
  const std::size_t n = order.size();
  if (custom_d3.rows() != n || custom_d3.cols() != n) throw InputError("custom d3: wrong shape");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (custom_d3(r, c).is_zero()) continue;
      if (std::popcount(order[c]) - std::popcount(order[r]) != 3) {
        throw InputError("custom d3: entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") does not lower the Morse index by 3");
      }
    }
  }
  ChainComplex cx(spec, koszul_matrix(spec, order), custom_d3);
  if (!(cx.differential() * cx.differential()).is_zero()) throw InputError("custom d3: (d1 + d3)^2 != 0");
  return cx;
}

PolyMatrix assemble_paper_matrix(std::int64_t n, std::int64_t m) {
  if (n < 1) throw InputError("assemble_paper_matrix: N must be >= 1");
  PolyMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i) out(i, i) = LaurentPoly::t_power_minus_one(n);
  if (m != 0) out(0, 3) = LaurentPoly::monomial(Rational(-static_cast<long>(m)), 1);
  return out;
}

PolyMatrix collapse_to_paper_form(const ChainComplex& cx) {
  const auto& spec = cx.spec();
  if (spec.b1() != 3 || spec.xi()[1] != 0 || spec.xi()[2] != 0 || spec.xi()[0] <= 0) {
    throw InputError("collapse_to_paper_form: needs b1 = 3 and xi = (N, 0, 0)");
  }
  // W in generator order over {2, 3}: {}, {2}, {3}, {2,3}.
  const Subset ws[] = {0b000, 0b010, 0b100, 0b110};
  std::vector<std::size_t> rows, cols;
  for (Subset w : ws) {
    rows.push_back(cx.index_of(w));
    cols.push_back(cx.index_of(w | 0b001));
  }
  return cx.differential().submatrix(rows, cols);
}

}  // namespace cuphom
