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

#include <sstream>
#include <stdexcept>

#include "cuphom/realization.hpp"
#include "cuphom/umodule.hpp"

namespace cuphom {

namespace {

// T^k in Z[T]/(f), by repeated squaring.
IntVector t_power(const TruncatedRing& ring, const Integer& k) {
  IntVector result(ring.rank());
  result[0] = 1;
  IntVector base = ring.times_t(result);
  Integer e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = ring.multiply(result, base);
    e >>= 1;
    if (e > 0) base = ring.multiply(base, base);
  }
  return result;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> small, large;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

constexpr long kMaxOrder = 1000000;

}  // namespace

CyclicityReport is_u_cyclic(const PresentedUModule& m, const HClass& x) {
  if (x.coords.size() != m.ambient_rank) throw InputError("is_u_cyclic: dimension mismatch");
  CyclicityReport rep;
  if (class_is_zero(m, x)) {
    rep.cyclic = true;
    rep.k_min = 1;
    rep.tested_exponent = 1;
    rep.trail.push_back("x = 0");
    return rep;
  }

  const IntMatrix& a = m.u_matrix();
  const TruncatedRing ring(m.n_value, m.power);
  const std::size_t d = ring.rank();

  // g_j = U^j x for j < d; f(U) x must vanish.
  std::vector<IntVector> orbit;
  orbit.reserve(d + 1);
  orbit.push_back(m.relations.reduce(x.coords));
  for (std::size_t j = 1; j <= d; ++j) orbit.push_back(m.relations.reduce(a * orbit.back()));
  IntVector fx(m.ambient_rank);
  for (std::size_t j = 0; j <= d; ++j) {
    const Integer& c = ring.modulus()[j];
    if (c == 0) continue;
    for (std::size_t i = 0; i < m.ambient_rank; ++i) mpz_addmul(fx[i].get_mpz_t(), c.get_mpz_t(), orbit[j][i].get_mpz_t());
  }
  if (!m.relations.contains(fx)) throw std::logic_error("is_u_cyclic: (T^N - 1)^power does not kill the class");
  orbit.pop_back();

  // V = Z[U] x = Z^d / K, U acting by the companion matrix of f.
  const IntMatrix g = IntMatrix::from_columns(m.ambient_rank, orbit);
  const Lattice kernel = Lattice::span(m.relations.preimage(g));
  const SmithResult snf = smith_normal_form(kernel.basis());
  const auto diag = snf.diagonal();
  std::vector<std::size_t> tors;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] > 1) tors.push_back(i);
  }
  rep.e = tors.empty() ? Integer(1) : diag[tors.back()];

  std::ostringstream head;
  head << "V = Z[U] x: rank " << d - kernel.rank() << " free, torsion invariants [";
  for (std::size_t k = 0; k < tors.size(); ++k) head << (k ? "," : "") << diag[tors[k]].get_str();
  head << "]";
  rep.trail.push_back(head.str());

  rep.s = 1;
  if (!tors.empty()) {
    const IntMatrix t_v = snf.P * ring.t_matrix() * unimodular_inverse(snf.P);
    const std::size_t nt = tors.size();
    IntMatrix t_tor(nt, nt);
    for (std::size_t i = 0; i < nt; ++i) {
      for (std::size_t j = 0; j < nt; ++j) {
        Integer v;
        mpz_fdiv_r(v.get_mpz_t(), t_v(tors[i], tors[j]).get_mpz_t(), diag[tors[i]].get_mpz_t());
        t_tor(i, j) = v;
      }
    }
    IntMatrix power = t_tor;
    long s = 1;
    while (!power.is_identity()) {
      if (++s > kMaxOrder) throw std::runtime_error("is_u_cyclic: order of T on the torsion exceeds the search cap");
      power = power * t_tor;
      for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < nt; ++j) {
          mpz_fdiv_r(power(i, j).get_mpz_t(), power(i, j).get_mpz_t(), diag[tors[i]].get_mpz_t());
        }
      }
    }
    rep.s = s;
  }
  rep.tested_exponent = Integer(static_cast<long>(m.n_value)) * rep.s * rep.e;
  rep.trail.push_back("s = " + rep.s.get_str() + ", e = " + rep.e.get_str() + ", testing k = N s e = " +
                      rep.tested_exponent.get_str());

  auto fixes = [&](const Integer& k) {
    IntVector v = t_power(ring, k);
    v[0] -= 1;
    return kernel.contains(v);
  };
  rep.cyclic = fixes(rep.tested_exponent);
  if (!rep.cyclic) {
    rep.trail.push_back("(U^k - 1) x != 0 for k = " + rep.tested_exponent.get_str() + ": not cyclic");
    return rep;
  }
  for (const Integer& k : divisors(rep.tested_exponent)) {
    if (fixes(k)) {
      rep.k_min = k;
      break;
    }
  }
  rep.trail.push_back("cyclic, least k = " + rep.k_min.get_str());
  return rep;
}

}  // namespace cuphom
