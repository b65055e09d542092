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

#include "cuphom/umodule.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "cuphom/realization.hpp"

namespace cuphom {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    case Parity::Total:
      return "total";
  }
  return "?";
}

HClass PresentedUModule::generator(std::size_t i) const {
  if (i >= ambient_rank) throw InputError("generator index out of range");
  HClass x = zero_class();
  x.coords[i] = 1;
  return x;
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

// Coordinates of every column of vectors with respect to the lattice basis.
IntMatrix coordinates_of(const Lattice& lat, const IntMatrix& vectors, const char* what) {
  IntMatrix out(lat.rank(), vectors.cols());
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    const auto coords = lat.coordinates(vectors.column(c));
    if (!coords) throw std::logic_error(std::string("homology: ") + what + " leaves the cycle lattice");
    out.set_column(c, *coords);
  }
  return out;
}

// Pad each d-block of a chain vector to 2d: the lift from A_p to A_2p.
IntMatrix lift_blocks(const IntMatrix& z, std::size_t blocks, std::size_t d) {
  IntMatrix out(blocks * 2 * d, z.cols());
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t c = 0; c < z.cols(); ++c) out(b * 2 * d + i, c) = z(b * d + i, c);
    }
  }
  return out;
}

Lattice with_coefficients(Lattice lat, const CoeffRing& ring) {
  return ring.is_rationals() ? lat.saturated() : lat;
}

IntMatrix append_modulus(const IntMatrix& gens, const CoeffRing& ring) {
  if (!ring.is_finite()) return gens;
  return gens.hconcat(IntMatrix::scalar(gens.rows(), Integer(static_cast<long>(ring.modulus()))));
}

struct Spot {
  std::vector<std::size_t> mid;
  std::vector<std::size_t> next;  // target of the outgoing map
  std::vector<std::size_t> prev;  // source of the incoming map
};

PresentedUModule compute_spot(const ChainComplex& cx, const PolyMatrix& differential, const Spot& spot, int power,
                              const std::optional<PolyMatrix>& perturbation) {
  const CoeffRing& ring = cx.spec().ring();
  const std::int64_t n_value = cx.spec().n_value();
  const TruncatedRing ap(n_value, power);
  const std::size_t d = ap.rank();
  const std::size_t n_mid = spot.mid.size() * d;
  const std::size_t n_next = spot.next.size() * d;
  const Integer modulus(static_cast<long>(ring.is_finite() ? ring.modulus() : 0));

  PresentedUModule out;
  out.n_value = n_value;
  out.b1 = cx.spec().b1();
  out.power = power;
  out.ring = ring;
  out.chain_generators = spot.mid;
  if (out.b1 > 3) out.u_label = "model U = T^-1 (associated-graded approximation)";
  if (n_mid == 0) {
    out.relations = Lattice(0);
    return out;
  }

  const PolyMatrix d_out = differential.submatrix(spot.next, spot.mid);
  const IntMatrix dout_p = ap.realize(d_out);

  // Cycles of C (x) A_p, with coefficients in R.
  IntMatrix cycles;
  if (n_next == 0) {
    cycles = IntMatrix::identity(n_mid);
  } else if (ring.is_finite()) {
    cycles = Lattice::scaled_full(n_next, modulus).preimage(dout_p);
  } else {
    cycles = kernel_basis(dout_p);
  }

  // Cycles whose connecting image D(lift z) / f is a boundary mod f.
  IntMatrix zlift_gens = cycles;
  if (n_next > 0 && cycles.cols() > 0) {
    const TruncatedRing a2p(n_value, 2 * power);
    const IntMatrix w = a2p.realize(d_out) * lift_blocks(cycles, spot.mid.size(), d);
    IntMatrix y(n_next, cycles.cols());
    for (std::size_t c = 0; c < cycles.cols(); ++c) {
      for (std::size_t b = 0; b < spot.next.size(); ++b) {
        IntVector block(2 * d);
        for (std::size_t i = 0; i < 2 * d; ++i) block[i] = w(b * 2 * d + i, c);
        auto [q, r] = dense_divmod(block, ap.modulus());
        for (const auto& x : r) {
          const bool ok = ring.is_finite() ? mpz_divisible_p(x.get_mpz_t(), modulus.get_mpz_t()) != 0 : x == 0;
          if (!ok) throw std::logic_error("homology: cycle lift is not divisible by the truncation modulus");
        }
        q.resize(d);
        for (std::size_t i = 0; i < d; ++i) y(b * d + i, c) = q[i];
      }
    }
    const Lattice boundaries = with_coefficients(Lattice::span(append_modulus(dout_p, ring)), ring);
    zlift_gens = cycles * boundaries.preimage(y);
  }
  const Lattice zlift = Lattice::span(zlift_gens);
  const std::size_t r1 = zlift.rank();
  if (r1 == 0) {
    out.relations = Lattice(0);
    return out;
  }

  // Relations: boundaries of C (x) A_p (and m * chains), in zlift coordinates.
  IntMatrix rel_gens(n_mid, 0);
  if (!spot.prev.empty()) rel_gens = ap.realize(differential.submatrix(spot.mid, spot.prev));
  rel_gens = append_modulus(rel_gens, ring);
  const Lattice rel = with_coefficients(Lattice::span(coordinates_of(zlift, rel_gens, "a boundary")), ring);

  const IntMatrix t_chain = block_diagonal(ap.t_matrix(), spot.mid.size());
  const IntMatrix tinv_chain = block_diagonal(ap.t_inverse_matrix(), spot.mid.size());
  const IntMatrix t_z = coordinates_of(zlift, t_chain * zlift.basis(), "T");
  const IntMatrix tinv_z = coordinates_of(zlift, tinv_chain * zlift.basis(), "T^-1");
  std::optional<IntMatrix> u_z;
  if (perturbation) {
    const IntMatrix u_chain = tinv_chain + ap.realize(perturbation->submatrix(spot.mid, spot.mid));
    u_z = coordinates_of(zlift, u_chain * zlift.basis(), "U");
  }

  // Drop coordinates that the relations kill outright (unit Smith invariants).
  std::vector<std::size_t> keep;
  IntMatrix p_mat = IntMatrix::identity(r1);
  std::vector<Integer> diag;
  if (rel.rank() > 0) {
    const SmithResult snf = smith_normal_form(rel.basis());
    p_mat = snf.P;
    diag = snf.diagonal();
  }
  for (std::size_t i = 0; i < r1; ++i) {
    if (i >= diag.size() || diag[i] != 1) keep.push_back(i);
  }
  const IntMatrix p_inv = unimodular_inverse(p_mat);
  const std::size_t r = keep.size();
  IntMatrix proj(r, r1), incl(r1, r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < r1; ++j) {
      proj(k, j) = p_mat(keep[k], j);
      incl(j, k) = p_inv(j, keep[k]);
    }
  }
  IntMatrix new_rel(r, 0);
  {
    std::vector<IntVector> cols;
    for (std::size_t k = 0; k < r; ++k) {
      if (keep[k] < diag.size() && diag[keep[k]] != 0) {
        IntVector v(r);
        v[k] = diag[keep[k]];
        cols.push_back(v);
      }
    }
    new_rel = IntMatrix::from_columns(r, cols);
  }
  out.ambient_rank = r;
  out.relations = Lattice::span(new_rel);

  auto reduced = [&](const IntMatrix& m) {
    IntMatrix res = proj * m * incl;
    for (std::size_t c = 0; c < res.cols(); ++c) res.set_column(c, out.relations.reduce(res.column(c)));
    return res;
  };
  out.t_action = reduced(t_z);
  out.t_inverse = reduced(tinv_z);
  if (u_z) out.u_action = reduced(*u_z);
  out.chain_basis = zlift.basis() * incl;

  out.grading.assign(r, -1);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t g = 0; g < spot.mid.size(); ++g) {
      bool nonzero = false;
      for (std::size_t i = 0; i < d && !nonzero; ++i) nonzero = out.chain_basis(g * d + i, k) != 0;
      if (nonzero) out.grading[k] = std::max(out.grading[k], cx.morse_index(spot.mid[g]));
    }
  }
  return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

// D exchanges parities, so total homology is the even part plus the odd part.
PresentedUModule direct_sum(const PresentedUModule& a, const PresentedUModule& b) {
  PresentedUModule out = a;
  out.ambient_rank = a.ambient_rank + b.ambient_rank;
  out.relations = Lattice::span(direct_sum(a.relations.basis(), b.relations.basis()));
  out.t_action = direct_sum(a.t_action, b.t_action);
  out.t_inverse = direct_sum(a.t_inverse, b.t_inverse);
  if (a.u_action || b.u_action) {
    out.u_action = direct_sum(a.u_action ? *a.u_action : a.t_inverse, b.u_action ? *b.u_action : b.t_inverse);
  }
  out.grading.insert(out.grading.end(), b.grading.begin(), b.grading.end());
  out.chain_generators.insert(out.chain_generators.end(), b.chain_generators.begin(), b.chain_generators.end());
  out.chain_basis = direct_sum(a.chain_basis, b.chain_basis);
  return out;
}

Spot parity_spot(const ChainComplex& cx, Parity parity) {
  const int p = parity == Parity::Even ? 0 : 1;
  const auto other = cx.generators_of_parity(1 - p);
  return {cx.generators_of_parity(p), other, other};
}

std::string describe(const ModuleInvariants& inv) {
  std::ostringstream os;
  os << inv.group.to_string() << ", T^N " << (inv.t_n_identity ? "= id" : "!= id") << ", nilpotency "
     << inv.nilpotency;
  return os.str();
}

IntMatrix matrix_power(const IntMatrix& a, std::int64_t k) {
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool columns_in(const Lattice& lat, const IntMatrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!lat.contains(m.column(c))) return false;
  }
  return true;
}

// Reduce every column modulo the relations to keep entries small.
IntMatrix reduce_columns(const Lattice& lat, IntMatrix m) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.set_column(c, lat.reduce(m.column(c)));
  return m;
}

}  // namespace

ModuleInvariants module_invariants(const PresentedUModule& m) {
  ModuleInvariants inv;
  inv.group = m.group_type();
  if (m.is_zero()) {
    inv.t_n_identity = true;
    return inv;
  }
  const IntMatrix step = matrix_power(m.t_action, m.n_value) - IntMatrix::identity(m.ambient_rank);
  inv.t_n_identity = columns_in(m.relations, step);
  IntMatrix acc = IntMatrix::identity(m.ambient_rank);
  inv.nilpotency = -1;
  for (int j = 1; j <= m.power + 1; ++j) {
    acc = reduce_columns(m.relations, step * acc);
    if (columns_in(m.relations, acc)) {
      inv.nilpotency = j;
      break;
    }
  }
  return inv;
}

std::size_t field_dimension(const PresentedUModule& m) {
  if (!m.ring.is_field()) throw InputError("field_dimension: coefficients " + m.ring.name() + " are not a field");
  const AbelianGroupType g = m.group_type();
  return m.ring.is_rationals() ? g.free_rank : g.torsion_invariants.size();
}

PresentedUModule homology(const ChainComplex& cx, Parity parity, const HomologyOptions& options) {
  if (options.perturbation) validate_perturbation(cx, *options.perturbation);
  const int power = options.power.value_or(cx.spec().effective_power());
  if (power < 1) throw InputError("truncation power must be >= 1");
  auto at_power = [&](int p, const std::optional<PolyMatrix>& pert) {
    if (parity != Parity::Total) return compute_spot(cx, cx.differential(), parity_spot(cx, parity), p, pert);
    return direct_sum(compute_spot(cx, cx.differential(), parity_spot(cx, Parity::Even), p, pert),
                      compute_spot(cx, cx.differential(), parity_spot(cx, Parity::Odd), p, pert));
  };
  PresentedUModule m = at_power(power, options.perturbation);
  if (options.stability_check) {
    const PresentedUModule next = at_power(power + 1, std::nullopt);
    const auto a = module_invariants(m), b = module_invariants(next);
    if (!(a == b)) {
      throw StabilityError("homology (" + to_string(parity) + ") changes between truncation power " +
                           std::to_string(power) + " [" + describe(a) + "] and " + std::to_string(power + 1) + " [" +
                           describe(b) + "]");
    }
  }
  return m;
}

std::vector<PresentedUModule> e2_page(const ChainComplex& cx, const HomologyOptions& options) {
  const int power = options.power.value_or(cx.spec().effective_power());
  std::vector<PresentedUModule> out;
  for (int deg = 0; deg <= cx.spec().b1(); ++deg) {
    const Spot spot{cx.generators_of_degree(deg), cx.generators_of_degree(deg - 1), cx.generators_of_degree(deg + 1)};
    PresentedUModule m = compute_spot(cx, cx.d1(), spot, power, std::nullopt);
    if (options.stability_check) {
      const PresentedUModule next = compute_spot(cx, cx.d1(), spot, power + 1, std::nullopt);
      const auto a = module_invariants(m), b = module_invariants(next);
      if (!(a == b)) {
        throw StabilityError("E2 degree " + std::to_string(deg) + " changes between truncation power " +
                             std::to_string(power) + " [" + describe(a) + "] and " + std::to_string(power + 1) +
                             " [" + describe(b) + "]");
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

PresentedUModule paper_module(std::int64_t n, std::int64_t m, CoeffRing ring, int power) {
  const TruncatedRing ap(n, power);
  const std::size_t d = ap.rank();
  PresentedUModule out;
  out.ambient_rank = 4 * d;
  out.relations = with_coefficients(Lattice::span(append_modulus(ap.realize(assemble_paper_matrix(n, m)), ring)), ring);
  out.t_action = block_diagonal(ap.t_matrix(), 4);
  out.t_inverse = block_diagonal(ap.t_inverse_matrix(), 4);
  out.n_value = n;
  out.b1 = 3;
  out.power = power;
  out.ring = ring;
  out.chain_basis = IntMatrix::identity(4 * d);
  // Targets e_W for W = {}, {2}, {3}, {2,3}.
  const int degrees[] = {0, 1, 1, 2};
  for (int k = 0; k < 4; ++k) out.grading.insert(out.grading.end(), d, degrees[k]);
  return out;
}

HClass paper_basis_class(const PresentedUModule& m, int k, std::int64_t shift) {
  if (k < 1 || k > 4 || m.ambient_rank % 4 != 0) throw InputError("paper_basis_class: k must be 1..4");
  const std::size_t d = m.ambient_rank / 4;
  HClass x = m.zero_class();
  x.coords[(k - 1) * d] = 1;
  if (shift == 0) return x;
  return apply_poly(m, LaurentPoly::monomial(1, shift), x);
}

HClass paper_sigma(const PresentedUModule& m, std::int64_t i) {
  HClass x = paper_basis_class(m, 4);
  x.coords[3 * (m.ambient_rank / 4)] = Integer(static_cast<long>(i));
  return x;
}

bool class_equal(const PresentedUModule& m, const HClass& x, const HClass& y) {
  if (x.coords.size() != m.ambient_rank || y.coords.size() != m.ambient_rank) {
    throw InputError("class_equal: dimension mismatch");
  }
  IntVector diff(m.ambient_rank);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = x.coords[i] - y.coords[i];
  return m.relations.contains(diff);
}

bool class_is_zero(const PresentedUModule& m, const HClass& x) {
  if (x.coords.size() != m.ambient_rank) throw InputError("class_is_zero: dimension mismatch");
  return m.relations.contains(x.coords);
}

HClass reduce_class(const PresentedUModule& m, const HClass& x) {
  if (x.coords.size() != m.ambient_rank) throw InputError("reduce_class: dimension mismatch");
  return HClass{m.relations.reduce(x.coords)};
}

HClass apply_poly(const PresentedUModule& m, const LaurentPoly& p, const HClass& x, Variable var) {
  if (x.coords.size() != m.ambient_rank) throw InputError("apply_poly: dimension mismatch");
  if (!p.has_integer_coefficients()) throw InputError("apply_poly: coefficients must be integral");
  HClass acc = m.zero_class();
  if (p.is_zero()) return acc;
  const IntMatrix* fwd = &m.t_action;
  const IntMatrix* back = &m.t_inverse;
  if (var == Variable::U) {
    fwd = &m.u_matrix();
    back = m.u_action ? nullptr : &m.t_action;
  }
  auto add = [&](const IntVector& v, const Rational& c) {
    const Integer k = c.get_num();
    for (std::size_t i = 0; i < v.size(); ++i) mpz_addmul(acc.coords[i].get_mpz_t(), k.get_mpz_t(), v[i].get_mpz_t());
  };
  // Walk exponents outward from 0 in both directions.
  IntVector up = m.relations.reduce(x.coords);
  LaurentPoly::Exponent at = 0;
  for (auto it = p.terms().lower_bound(0); it != p.terms().end(); ++it) {
    while (at < it->first) {
      up = m.relations.reduce(*fwd * up);
      ++at;
    }
    add(up, it->second);
  }
  IntVector down = m.relations.reduce(x.coords);
  at = 0;
  for (auto it = std::make_reverse_iterator(p.terms().lower_bound(0)); it != p.terms().rend(); ++it) {
    if (back == nullptr) throw InputError("apply_poly: negative powers of a perturbed U are not available");
    while (at > it->first) {
      down = m.relations.reduce(*back * down);
      --at;
    }
    add(down, it->second);
  }
  return reduce_class(m, acc);
}

CyclicClassResult find_u_cyclic_class(const PresentedUModule& m, const std::optional<HClass>& start) {
  CyclicClassResult out;
  if (start) {
    if (class_is_zero(m, *start)) throw InputError("find_u_cyclic_class: the start class is zero");
    out.start = *start;
    out.trail.push_back("start: supplied class");
  } else {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < m.ambient_rank && !first; ++i) {
      if (!class_is_zero(m, m.generator(i))) first = i;
    }
    if (!first) throw InputError("find_u_cyclic_class: the module is zero");
    out.start = m.generator(*first);
    out.trail.push_back("start: generator " + std::to_string(*first));
  }
  out.sigma = out.start;
  const LaurentPoly step = LaurentPoly::constant(1) - LaurentPoly::monomial(1, m.n_value);  // 1 - U^N
  for (int j = 0; j <= m.power + 1; ++j) {
    const HClass next = apply_poly(m, step, out.sigma, Variable::U);
    if (class_is_zero(m, next)) {
      out.iterations = j;
      out.trail.push_back("(1 - U^N)^" + std::to_string(j + 1) + " start = 0; stop at j = " + std::to_string(j));
      return out;
    }
    out.sigma = next;
  }
  throw std::logic_error("find_u_cyclic_class: (1 - U^N) is not nilpotent on the module");
}

void validate_perturbation(const ChainComplex& cx, const PolyMatrix& p) {
  const std::size_t n = cx.size();
  if (p.rows() != n || p.cols() != n) throw InputError("perturbation: wrong shape");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (p(r, c).is_zero()) continue;
      const int drop = cx.morse_index(c) - cx.morse_index(r);
      if (drop <= 0) {
        throw InputError("perturbation: entry (" + cx.generator_name(r) + ", " + cx.generator_name(c) +
                         ") does not lower the filtration");
      }
      if (drop % 2 != 0) {
        throw InputError("perturbation: entry (" + cx.generator_name(r) + ", " + cx.generator_name(c) +
                         ") changes parity");
      }
    }
  }
  if (!(p * cx.differential() == cx.differential() * p)) {
    throw InputError("perturbation: does not commute with the differential");
  }
}

namespace {

std::vector<Subset> even_contractions(int b1) {
  std::vector<Subset> out;
  for (Subset s = 0; s < (Subset{1} << b1); ++s) {
    const int k = std::popcount(s);
    if (k >= 2 && k % 2 == 0) out.push_back(s);
  }
  return out;
}

std::size_t homotopy_slots(const ChainComplex& cx) {
  std::size_t slots = 0;
  for (std::size_t g = 0; g < cx.size(); ++g) slots += static_cast<std::size_t>(cx.morse_index(g));
  return slots;
}

}  // namespace

std::size_t perturbation_draw_count(const ChainComplex& cx) {
  return 2 * even_contractions(cx.spec().b1()).size() + 3 * homotopy_slots(cx);
}

PolyMatrix perturbation_from_draws(const ChainComplex& cx, const std::vector<int>& draws) {
  if (draws.size() != perturbation_draw_count(cx)) throw InputError("perturbation: wrong number of draws");
  const std::size_t n = cx.size();
  const int b1 = cx.spec().b1();
  std::size_t at = 0;
  PolyMatrix p(n, n);
  for (Subset gamma : even_contractions(b1)) {
    const int c = draws[at++], a = draws[at++];
    if (c == 0) continue;
    for (std::size_t col = 0; col < n; ++col) {
      Subset s = cx.subset(col);
      if ((s & gamma) != gamma) continue;
      int sign = 1;
      for (int i = 1; i <= b1; ++i) {
        if (!((gamma >> (i - 1)) & 1)) continue;
        if (std::popcount(s & ((Subset{1} << (i - 1)) - 1)) % 2) sign = -sign;
        s &= ~(Subset{1} << (i - 1));
      }
      p(cx.index_of(s), col) += LaurentPoly::monomial(c * sign, a);
    }
  }
  PolyMatrix h(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const Subset s = cx.subset(col);
    for (int i = 1; i <= b1; ++i) {
      if (!((s >> (i - 1)) & 1)) continue;
      const int keep = draws[at++], c = draws[at++], a = draws[at++];
      if (keep >= 2 && c != 0) h(cx.index_of(s & ~(Subset{1} << (i - 1))), col) = LaurentPoly::monomial(c, a);
    }
  }
  return p + cx.differential() * h + h * cx.differential();
}

AssocGradedReport check_assoc_graded_u(const ChainComplex& cx, const std::optional<PolyMatrix>& perturbation,
                                       std::optional<int> height) {
  AssocGradedReport rep;
  rep.height = height.value_or(cx.spec().b1() + 1);
  HomologyOptions opts;
  opts.perturbation = perturbation;
  opts.stability_check = false;
  const PresentedUModule m = homology(cx, Parity::Total, opts);

  rep.filtration_lowering = true;
  if (perturbation && !m.is_zero()) {
    const TruncatedRing ap(m.n_value, m.power);
    const std::size_t d = ap.rank();
    const IntMatrix p_chain = ap.realize(perturbation->submatrix(m.chain_generators, m.chain_generators));
    const IntMatrix moved = p_chain * m.chain_basis;
    auto level = [&](const IntMatrix& mat, std::size_t col) {
      int lv = -1;
      for (std::size_t g = 0; g < m.chain_generators.size(); ++g) {
        for (std::size_t i = 0; i < d; ++i) {
          if (mat(g * d + i, col) != 0) {
            lv = std::max(lv, cx.morse_index(m.chain_generators[g]));
            break;
          }
        }
      }
      return lv;
    };
    for (std::size_t k = 0; k < m.ambient_rank && rep.filtration_lowering; ++k) {
      const int before = level(m.chain_basis, k), after = level(moved, k);
      if (after >= 0 && after >= before) {
        rep.filtration_lowering = false;
        rep.witness = "generator " + std::to_string(k) + ": P raises or keeps filtration level " +
                      std::to_string(before) + " -> " + std::to_string(after);
      }
    }
  }

  const LaurentPoly killer = (LaurentPoly::constant(1) - LaurentPoly::monomial(1, m.n_value)).pow(rep.height);
  rep.annihilated = true;
  for (std::size_t k = 0; k < m.ambient_rank; ++k) {
    if (!class_is_zero(m, apply_poly(m, killer, m.generator(k), Variable::U))) {
      rep.annihilated = false;
      if (rep.witness.empty()) rep.witness = "generator " + std::to_string(k) + " survives (1 - U^N)^" + std::to_string(rep.height);
      break;
    }
  }
  return rep;
}

}  // namespace cuphom
