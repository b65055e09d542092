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

#include "cuphom/laurent.hpp"

#include <sstream>

namespace cuphom {

LaurentPoly::LaurentPoly(CoeffRing ring, const Terms& terms) : ring_(ring) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(const Rational& c, CoeffRing ring) {
  return monomial(c, 0, ring);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e, CoeffRing ring) {
  LaurentPoly p(ring);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::t_power_minus_one(Exponent e, CoeffRing ring) {
  LaurentPoly p(ring);
  p.add_term(e, 1);
  p.add_term(0, -1);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::over(CoeffRing target) const {
  LaurentPoly out(target);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly out(ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(1, ring_);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

void LaurentPoly::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    Rational v = ring_.normalize(c);
    if (v != 0) terms_.emplace(e, std::move(v));
    return;
  }
  it->second = ring_.normalize(it->second + c);
  if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::require_same_ring(const LaurentPoly& other) const {
  if (!(ring_ == other.ring_)) {
    throw RingMismatch("Laurent polynomials over " + ring_.name() + " and " + other.ring_.name());
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_ring(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  require_same_ring(other);
  LaurentPoly out(ring_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  LaurentPoly out(ring_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(ring_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

std::string LaurentPoly::to_string(char variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first, the way the matrices are usually written.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c;
    bool negative = c < 0;
    if (negative) mag = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << variable;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add:
      return a + b;
    case PolyOp::Sub:
      return a - b;
    case PolyOp::Mul:
      return a * b;
  }
  return a;
}

LaurentPoly poly_substitute(const LaurentPoly& p, LaurentPoly::Exponent scale) {
  if (scale == 0) throw InputError("poly_substitute: exponent scale must be nonzero");
  LaurentPoly::Terms terms;
  for (const auto& [e, c] : p.terms()) terms.emplace(e * scale, c);
  return LaurentPoly(p.ring(), terms);
}

std::pair<LaurentPoly, LaurentPoly::Exponent> unit_normalize(const LaurentPoly& p) {
  if (p.is_zero()) return {p, 0};
  const auto shift = p.min_exponent();
  return {p.shifted(-shift), shift};
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!(dividend.ring() == divisor.ring())) {
    throw RingMismatch("poly_divmod over different rings");
  }
  if ((!dividend.is_zero() && dividend.min_exponent() < 0) || divisor.min_exponent() < 0) {
    throw InputError("poly_divmod expects ordinary polynomials (no negative exponents)");
  }
  const CoeffRing& ring = divisor.ring();
  const auto deg = divisor.max_exponent();
  const Rational lead_inv = ring.inverse(divisor.coefficient(deg));

  LaurentPoly quotient(ring);
  LaurentPoly remainder = dividend;
  while (!remainder.is_zero() && remainder.max_exponent() >= deg) {
    const auto shift = remainder.max_exponent() - deg;
    const Rational c = remainder.coefficient(remainder.max_exponent()) * lead_inv;
    const LaurentPoly term = LaurentPoly::monomial(c, shift, ring);
    quotient += term;
    remainder -= divisor * term;
  }
  return {quotient, remainder};
}

LaurentPoly make_monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p * p.ring().inverse(p.coefficient(p.max_exponent()));
}

GcdResult poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) throw InputError("poly_gcd: zero input");
  if (!(a.ring() == b.ring())) throw RingMismatch("poly_gcd over different rings");
  const CoeffRing ring = a.ring();
  if (!ring.is_field()) throw InputError("poly_gcd needs a field, got " + ring.name());

  auto [a0, sa] = unit_normalize(a);
  auto [b0, sb] = unit_normalize(b);

  LaurentPoly r0 = a0, r1 = b0;
  LaurentPoly s0 = LaurentPoly::constant(1, ring), s1(ring);
  LaurentPoly t0(ring), t1 = LaurentPoly::constant(1, ring);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    LaurentPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    LaurentPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Rational lead_inv = ring.inverse(r0.coefficient(r0.max_exponent()));
  // r0 = s0*a0 + t0*b0 with a0 = a*T^-sa, b0 = b*T^-sb.
  return {r0 * lead_inv, (s0 * lead_inv).shifted(-sa), (t0 * lead_inv).shifted(-sb)};
}

GcdResult poly_gcd_over_rationals(const LaurentPoly& a, const LaurentPoly& b) {
  const CoeffRing& ring = a.ring();
  if (ring.is_finite()) {
    if (!ring.is_field()) {
      throw InputError("gcd is not supported over composite " + ring.name());
    }
    return poly_gcd(a, b);
  }
  const CoeffRing q = CoeffRing::rationals();
  return poly_gcd(a.over(q), b.over(q));
}

IntegerBezout bezout_integer_clearing(const LaurentPoly& u, const LaurentPoly& v) {
  Integer n = 1;
  for (const auto* p : {&u, &v}) {
    for (const auto& [e, c] : p->terms()) n = lcm(n, c.get_den());
  }
  const CoeffRing z = CoeffRing::integers();
  const Rational scale(n);
  return {(u.over(CoeffRing::rationals()) * scale).over(z),
          (v.over(CoeffRing::rationals()) * scale).over(z), n};
}

}  // namespace cuphom
