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

#include "cuphom/manifold.hpp"

#include <numeric>
#include <sstream>

#include "cuphom/normal_form.hpp"

namespace cuphom {

ManifoldSpec::ManifoldSpec(int b1, std::vector<std::int64_t> xi, std::map<CupIndex, Integer> cup3, CoeffRing ring,
                           std::optional<int> truncation_power)
    : b1_(b1), xi_(std::move(xi)), ring_(ring), truncation_power_(truncation_power) {
  if (b1_ < 1) throw InputError("b1 must be positive, got " + std::to_string(b1_));
  if (static_cast<int>(xi_.size()) != b1_) {
    throw InputError("xi has " + std::to_string(xi_.size()) + " entries, expected b1 = " + std::to_string(b1_));
  }
  if (truncation_power_ && *truncation_power_ < 1) throw InputError("truncation_power must be >= 1");
  std::int64_t g = 0;
  for (auto v : xi_) g = std::gcd(g, v);
  if (g == 0) {
    throw TorsionSpinCError("xi = 0: c1 of the spin-c structure is torsion; the model needs a non-torsion class");
  }
  n_value_ = g;
  for (const auto& [idx, value] : cup3) {
    const auto [i, j, k] = idx;
    if (!(1 <= i && i < j && j < k && k <= b1_)) {
      throw InputError("cup3 index (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                       ") must be strictly increasing within 1..b1");
    }
    if (value != 0) cup3_.emplace(idx, value);
  }
}

ManifoldSpec ManifoldSpec::three_torus_like(std::int64_t n, std::int64_t m, CoeffRing ring) {
  if (n < 1) throw InputError("N must be >= 1");
  std::map<CupIndex, Integer> cup;
  if (m != 0) cup.emplace(CupIndex{1, 2, 3}, Integer(static_cast<long>(m)));
  return ManifoldSpec(3, {n, 0, 0}, cup, ring);
}

Integer ManifoldSpec::mu(int i, int j, int k) const {
  if (i == j || j == k || i == k) return 0;
  std::array<int, 3> idx{i, j, k};
  int sign = 1;
  // Bubble sort, counting transpositions.
  for (int pass = 0; pass < 2; ++pass) {
    for (int a = 0; a < 2; ++a) {
      if (idx[a] > idx[a + 1]) {
        std::swap(idx[a], idx[a + 1]);
        sign = -sign;
      }
    }
  }
  auto it = cup3_.find(idx);
  if (it == cup3_.end()) return 0;
  return sign * it->second;
}

ManifoldSpec ManifoldSpec::with_ring(CoeffRing ring) const {
  ManifoldSpec out = *this;
  out.ring_ = ring;
  return out;
}

ManifoldSpec ManifoldSpec::with_truncation_power(int power) const {
  if (power < 1) throw InputError("truncation_power must be >= 1");
  ManifoldSpec out = *this;
  out.truncation_power_ = power;
  return out;
}

std::string ManifoldSpec::to_string() const {
  std::ostringstream os;
  os << "b1=" << b1_ << " xi=(";
  for (std::size_t i = 0; i < xi_.size(); ++i) os << (i ? "," : "") << xi_[i];
  os << ") cup3={";
  bool first = true;
  for (const auto& [idx, v] : cup3_) {
    os << (first ? "" : ", ") << idx[0] << idx[1] << idx[2] << ':' << v.get_str();
    first = false;
  }
  os << "} ring=" << ring_.name();
  return os.str();
}

NormalizedSpec normalize_xi(const ManifoldSpec& spec) {
  const int b = spec.b1();
  const auto n = spec.n_value();
  const auto& xi = spec.xi();

  bool already = xi[0] == n;
  for (int i = 1; i < b && already; ++i) already = xi[i] == 0;
  if (already) return {spec, IntMatrix::identity(b)};

  IntMatrix row(1, b);
  for (int i = 0; i < b; ++i) row(0, i) = Integer(static_cast<long>(xi[i]));
  SmithResult snf = smith_normal_form(row);
  IntMatrix q = snf.Q;
  // P is 1x1 = +-1; fold its sign into the first column so xi*Q = (N, 0, ...).
  if (snf.P(0, 0) == -1) q.negate_column(0);

  std::vector<std::int64_t> new_xi(b, 0);
  for (int j = 0; j < b; ++j) {
    Integer s = 0;
    for (int i = 0; i < b; ++i) s += row(0, i) * q(i, j);
    new_xi[j] = s.get_si();
  }

  // mu'(a'_i, a'_j, a'_k) with a'_j = sum_p Q_{pj} a_p.
  std::map<CupIndex, Integer> new_cup;
  if (!spec.cup3().empty()) {
    for (int i = 1; i <= b; ++i) {
      for (int j = i + 1; j <= b; ++j) {
        for (int k = j + 1; k <= b; ++k) {
          Integer total = 0;
          for (int p = 1; p <= b; ++p) {
            if (q(p - 1, i - 1) == 0) continue;
            for (int r = 1; r <= b; ++r) {
              if (r == p || q(r - 1, j - 1) == 0) continue;
              for (int s = 1; s <= b; ++s) {
                if (s == p || s == r || q(s - 1, k - 1) == 0) continue;
                total += q(p - 1, i - 1) * q(r - 1, j - 1) * q(s - 1, k - 1) * spec.mu(p, r, s);
              }
            }
          }
          if (total != 0) new_cup.emplace(CupIndex{i, j, k}, total);
        }
      }
    }
  }
  ManifoldSpec out(b, new_xi, new_cup, spec.ring(), spec.truncation_power());
  return {out, q};
}

}  // namespace cuphom
