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

#include "cuphom/ring.hpp"

#include <charconv>

namespace cuphom {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

CoeffRing::CoeffRing(Kind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {
  is_field_ = kind == Kind::Rationals || (kind == Kind::IntegersMod && is_prime(modulus));
}

CoeffRing CoeffRing::integers_mod(std::int64_t m) {
  if (m < 2) throw InputError("Z/m requires m >= 2, got " + std::to_string(m));
  return CoeffRing(Kind::IntegersMod, m);
}

CoeffRing CoeffRing::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Zmod:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    std::int64_t m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InputError("bad ring modulus in '" + std::string(text) + "'");
    }
    return integers_mod(m);
  }
  throw InputError("unknown ring '" + std::string(text) + "' (expected Z, Q or Zmod:<m>)");
}

Rational CoeffRing::normalize(const Rational& value) const {
  switch (kind_) {
    case Kind::Rationals:
      return value;
    case Kind::Integers:
      if (value.get_den() != 1) {
        throw InputError("non-integral coefficient " + value.get_str() + " over Z");
      }
      return value;
    case Kind::IntegersMod: {
      const Integer m(static_cast<long>(modulus_));
      Integer num = value.get_num();
      Integer den = value.get_den();
      if (den != 1) {
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
          throw InputError("coefficient " + value.get_str() + " has no image in " + name());
        }
        num *= inv;
      }
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
      return Rational(r);
    }
  }
  return value;
}

Rational CoeffRing::inverse(const Rational& value) const {
  const Rational v = normalize(value);
  if (v == 0) throw std::domain_error("inverse of zero");
  switch (kind_) {
    case Kind::Rationals:
      return 1 / v;
    case Kind::Integers:
      if (v == 1 || v == -1) return v;
      throw std::domain_error(v.get_str() + " is not a unit in Z");
    case Kind::IntegersMod: {
      const Integer m(static_cast<long>(modulus_));
      Integer inv;
      Integer num = v.get_num();
      if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw std::domain_error(v.get_str() + " is not a unit in " + name());
      }
      return Rational(inv);
    }
  }
  return v;
}

std::string CoeffRing::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersMod:
      return "Zmod:" + std::to_string(modulus_);
  }
  return "?";
}

}  // namespace cuphom
