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

#include "cuphom/verify.hpp"

#include <sstream>

namespace cuphom {

namespace {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

LaurentPoly tn1(std::int64_t n) { return LaurentPoly::t_power_minus_one(n); }

void fail_with(CheckReport& r, Json witness) {
  r.passed = false;
  r.details["witness"] = std::move(witness);
}

}  // namespace

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const HClass& x) {
  Json out = Json::array();
  for (const auto& c : x.coords) out.push_back(to_json(c));
  return out;
}

Json to_json(const AbelianGroupType& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion_invariants) t.push_back(to_json(d));
  return Json{{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.to_string()}};
}

Json to_json(const ModuleInvariants& inv) {
  return Json{{"group", to_json(inv.group)}, {"t_n_identity", inv.t_n_identity}, {"nilpotency", inv.nilpotency}};
}

Json to_json(const ManifoldSpec& spec) {
  Json cup = Json::array();
  for (const auto& [idx, v] : spec.cup3()) cup.push_back(Json::array({idx[0], idx[1], idx[2], to_json(v)}));
  Json out{{"b1", spec.b1()}, {"xi", spec.xi()}, {"cup3", cup}, {"ring", spec.ring().name()}};
  if (spec.truncation_power()) out["truncation_power"] = *spec.truncation_power();
  return out;
}

Json CheckReport::to_json() const {
  return Json{{"check", check_name}, {"parameters", parameters}, {"verdict", verdict()}, {"details", details}};
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << check_name << ": " << verdict() << "\n";
  for (const auto& [k, v] : parameters.items()) os << "  " << k << " = " << v.dump() << "\n";
  for (const auto& [k, v] : details.items()) os << "  " << k << ": " << v.dump() << "\n";
  return os.str();
}

ManifoldSpec random_spec(std::mt19937_64& rng, const SpecSampler& s) {
  auto draw = [&](int bound) { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound; };
  const int b1 = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(s.max_b1));
  std::vector<std::int64_t> xi(b1);
  bool zero = true;
  while (zero) {
    for (auto& v : xi) {
      v = draw(s.xi_bound);
      zero = zero && v == 0;
    }
  }
  std::map<CupIndex, Integer> cup;
  for (int i = 1; i <= b1; ++i)
    for (int j = i + 1; j <= b1; ++j)
      for (int k = j + 1; k <= b1; ++k) cup[{i, j, k}] = Integer(static_cast<long>(draw(s.cup_bound)));
  return ManifoldSpec(b1, xi, cup, s.ring);
}

CheckReport check_lemma_torus(int b1, const std::vector<std::int64_t>& xi, const CoeffRing& ring) {
  if (!ring.is_field() && ring.is_finite()) throw InputError("lemma-torus needs Z or a field, got " + ring.name());
  const ManifoldSpec spec(b1, xi, {}, ring);
  CheckReport r;
  r.check_name = "lemma-torus";
  r.parameters = Json{{"b1", b1}, {"xi", xi}, {"ring", ring.name()}};
  const std::int64_t n = spec.n_value();
  r.details["N"] = n;

  // T^N - 1 kills d1-homology, so power 2 (checked against 3) is ample.
  HomologyOptions opts;
  opts.power = 2;
  const auto pages = e2_page(build_complex(spec), opts);
  r.passed = true;
  Json degrees = Json::array();
  Json witness;
  for (int d = 0; d <= b1; ++d) {
    const auto& m = pages[static_cast<std::size_t>(d)];
    const Integer expected = Integer(static_cast<long>(n)) * binomial(b1 - 1, d);
    const auto inv = module_invariants(m);
    Integer observed;
    bool shape_ok = true;
    if (ring.is_field()) {
      observed = static_cast<unsigned long>(field_dimension(m));
    } else {
      observed = static_cast<unsigned long>(inv.group.free_rank);
      shape_ok = inv.group.torsion_invariants.empty();
    }
    const bool ok = observed == expected && shape_ok && inv.t_n_identity;
    degrees.push_back(Json{{"degree", d},
                           {"expected_rank", to_json(expected)},
                           {"observed_rank", to_json(observed)},
                           {"group", inv.group.to_string()},
                           {"t_n_identity", inv.t_n_identity}});
    if (!ok && r.passed) {
      r.passed = false;
      witness = degrees.back();
    }
  }
  r.details["degrees"] = degrees;
  if (!r.passed) fail_with(r, witness);
  return r;
}

CheckReport check_theorem1(const ManifoldSpec& spec) {
  CheckReport r;
  r.check_name = "theorem1";
  r.parameters = Json{{"spec", to_json(spec)}};
  const auto cx = build_complex(spec);
  const auto m = homology(cx, Parity::Total);
  r.details["invariants"] = to_json(module_invariants(m));
  if (m.is_zero()) {
    fail_with(r, Json{{"reason", "homology is zero"}});
    return r;
  }
  const auto found = find_u_cyclic_class(m);
  const bool nonzero = !class_is_zero(m, found.sigma);
  const bool fixed = class_is_zero(m, apply_poly(m, tn1(spec.n_value()), found.sigma, Variable::U));
  const bool quick = found.iterations <= spec.b1() + 1;
  r.details["start"] = to_json(found.start);
  r.details["sigma"] = to_json(found.sigma);
  r.details["iterations"] = found.iterations;
  r.details["u_label"] = m.u_label;
  r.passed = nonzero && fixed && quick;
  if (!r.passed) {
    fail_with(r, Json{{"sigma", to_json(found.sigma)}, {"nonzero", nonzero}, {"u_n_fixed", fixed}, {"iterations", found.iterations}});
    return r;
  }
  if (spec.ring().is_finite() && spec.ring().modulus() == 2) {
    for (std::size_t i = 0; i < m.ambient_rank; ++i) {
      const auto c = is_u_cyclic(m, m.generator(i));
      if (!c.cyclic) {
        fail_with(r, Json{{"generator", i}, {"reason", "not U-cyclic over Z/2"}});
        return r;
      }
    }
    r.details["all_generators_cyclic"] = true;
  }
  return r;
}

CheckReport check_annihilation_bound(const ManifoldSpec& spec, int trials, std::uint64_t seed, std::optional<int> exponent) {
  if (trials < 0) throw InputError("trials must be >= 0");
  const int e = exponent.value_or(spec.b1() + 1);
  if (e < 0) throw InputError("exponent must be >= 0");
  CheckReport r;
  r.check_name = "annihilation";
  r.parameters = Json{{"spec", to_json(spec)}, {"trials", trials}, {"seed", seed}, {"exponent", e}};
  const auto cx = build_complex(spec);
  const LaurentPoly killer = tn1(spec.n_value()).pow(static_cast<unsigned>(e));
  std::mt19937_64 rng(seed);
  Json runs = Json::array();
  r.passed = true;
  for (int t = 0; t <= trials && r.passed; ++t) {
    HomologyOptions opts;
    if (t > 0) {
      // The group does not depend on P; stability was checked on trial 0.
      opts.perturbation = random_perturbation(cx, rng);
      opts.stability_check = false;
    }
    const auto m = homology(cx, Parity::Total, opts);
    for (std::size_t i = 0; i < m.ambient_rank; ++i) {
      const HClass image = apply_poly(m, killer, m.generator(i), Variable::U);
      if (!class_is_zero(m, image)) {
        fail_with(r, Json{{"trial", t}, {"generator", i}, {"image", to_json(reduce_class(m, image))}});
        break;
      }
    }
    runs.push_back(Json{{"trial", t}, {"u", t == 0 ? m.u_label : "T^-1 + P"}, {"generators", m.ambient_rank}});
  }
  r.details["runs"] = runs;
  return r;
}

CheckReport check_annihilation_paper(std::int64_t n, std::int64_t mm, int exponent) {
  if (exponent < 0) throw InputError("exponent must be >= 0");
  CheckReport r;
  r.check_name = "annihilation";
  r.parameters = Json{{"N", n}, {"m", mm}, {"exponent", exponent}, {"module", "4x4 cokernel"}};
  const auto m = paper_module(n, mm);
  const LaurentPoly killer = tn1(n).pow(static_cast<unsigned>(exponent));
  std::vector<std::pair<std::string, HClass>> sweep;
  for (int i = 1; i <= 4; ++i) sweep.emplace_back("sigma_" + std::to_string(i), paper_sigma(m, i));
  for (std::size_t i = 0; i < m.ambient_rank; ++i) sweep.emplace_back("generator_" + std::to_string(i), m.generator(i));
  r.passed = true;
  for (const auto& [name, x] : sweep) {
    const HClass image = apply_poly(m, killer, x, Variable::U);
    if (!class_is_zero(m, image)) {
      fail_with(r, Json{{"class", name}, {"coords", to_json(x)}, {"image", to_json(reduce_class(m, image))}});
      break;
    }
  }
  r.details["classes_checked"] = sweep.size();
  return r;
}

CheckReport check_theorem2(std::int64_t n, std::int64_t mm, int i_max, int k_max) {
  if (mm == 0) throw InputError("theorem2 needs m != 0 (a1 u a2 u a3 must be nonzero)");
  if (n < 1) throw InputError("N must be >= 1");
  if (i_max < 1 || k_max < 1) throw InputError("i_max and k_max must be >= 1");
  CheckReport r;
  r.check_name = "theorem2";
  r.parameters = Json{{"N", n}, {"m", mm}, {"i_max", i_max}, {"k_max", k_max}};
  const auto m = paper_module(n, mm);
  const LaurentPoly square = tn1(n).pow(2);
  std::vector<HClass> sigmas;
  Json rows = Json::array();
  r.passed = true;
  for (int i = 1; i <= i_max && r.passed; ++i) {
    const HClass s = paper_sigma(m, i);
    const auto c = is_u_cyclic(m, s);
    int first_zero = 0;
    for (int k = 1; k <= k_max && first_zero == 0; ++k) {
      if (class_is_zero(m, apply_poly(m, tn1(k), s))) first_zero = k;
    }
    const bool killed = class_is_zero(m, apply_poly(m, square, s));
    rows.push_back(Json{{"i", i},
                        {"cyclic", c.cyclic},
                        {"tested_exponent", to_json(c.tested_exponent)},
                        {"torsion_exponent", to_json(c.e)},
                        {"torsion_period", to_json(c.s)},
                        {"square_kills", killed}});
    if (c.cyclic) fail_with(r, Json{{"i", i}, {"reason", "U-cyclic"}, {"k_min", to_json(c.k_min)}});
    else if (first_zero != 0) fail_with(r, Json{{"i", i}, {"reason", "(T^k - 1) sigma = 0"}, {"k", first_zero}});
    else if (!killed) fail_with(r, Json{{"i", i}, {"reason", "(T^N - 1)^2 sigma != 0"}});
    for (std::size_t j = 0; j < sigmas.size() && r.passed; ++j) {
      if (class_equal(m, sigmas[j], s)) fail_with(r, Json{{"i", i}, {"equals", j + 1}});
    }
    sigmas.push_back(s);
  }
  r.details["sigmas"] = rows;
  return r;
}

CheckReport check_pfh_translation(std::int64_t d, std::int64_t g, int b1, std::int64_t n) {
  if (g < 0) throw InputError("genus must be >= 0");
  if (b1 < 1) throw InputError("b1 must be >= 1");
  if (n < 1) throw InputError("N must be >= 1");
  if (d <= std::max<std::int64_t>(2 * g - 2, 0)) {
    throw InputError("degree d = " + std::to_string(d) + " must exceed max(2g - 2, 0) = " +
                     std::to_string(std::max<std::int64_t>(2 * g - 2, 0)));
  }
  CheckReport r;
  r.check_name = "pfh-translate";
  r.parameters = Json{{"d", d}, {"g", g}, {"b1", b1}, {"N", n}};
  const std::int64_t k = d - g + 1;
  r.details["d_minus_g_plus_1"] = k;
  r.details["c1_pairing"] = 2 * k;
  r.details["exponent_polynomial"] =
      "(U^" + std::to_string(k) + " - 1)^" + std::to_string(b1 + 1);
  r.details["expanded"] = tn1(k).pow(static_cast<unsigned>(b1 + 1)).to_string('U');
  r.passed = k % n == 0;
  if (!r.passed) fail_with(r, Json{{"d_minus_g_plus_1", k}, {"remainder_mod_N", k % n}});
  return r;
}

}  // namespace cuphom
