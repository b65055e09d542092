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
 * @file laurent.hpp
 * @brief Exact univariate Laurent polynomials R[T, T^-1].
 *
 * A LaurentPoly is a sparse map exponent -> nonzero coefficient. The map never
 * stores a zero, so two polynomials are equal exactly when their maps are.
 * The U-map is modelled as T^-1; a polynomial in U is turned into one in T by
 * poly_substitute(p, -1).
 *
 * gcd and divisibility live in Q[T] (or F_p[T]): a Laurent polynomial is first
 * multiplied by the unique power of T that makes its lowest exponent zero.
 */

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "cuphom/ring.hpp"

namespace cuphom {

class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Rational>;

  explicit LaurentPoly(CoeffRing ring = CoeffRing::integers()) : ring_(ring) {}
  LaurentPoly(CoeffRing ring, const Terms& terms);

  static LaurentPoly constant(const Rational& c, CoeffRing ring = CoeffRing::integers());
  static LaurentPoly monomial(const Rational& c, Exponent e, CoeffRing ring = CoeffRing::integers());
  /// T^e - 1, the Koszul weight of a circle with holonomy T^e.
  static LaurentPoly t_power_minus_one(Exponent e, CoeffRing ring = CoeffRing::integers());

  const CoeffRing& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  /// Lowest / highest exponent; throws std::domain_error on the zero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  Rational coefficient(Exponent e) const;
  bool has_integer_coefficients() const;

  /// Same polynomial read over another ring (Z -> Q embedding, Z -> Z/m reduction, ...).
  LaurentPoly over(CoeffRing target) const;

  /// Multiplication by T^k.
  LaurentPoly shifted(Exponent k) const;
  LaurentPoly pow(unsigned n) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  std::string to_string(char variable = 'T') const;

 private:
  void add_term(Exponent e, const Rational& c);
  void require_same_ring(const LaurentPoly& other) const;

  CoeffRing ring_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

enum class PolyOp { Add, Sub, Mul };

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op);

/// Exponent rescaling e -> e * scale. scale = -1 rewrites a U-polynomial as a T-polynomial.
LaurentPoly poly_substitute(const LaurentPoly& p, LaurentPoly::Exponent scale);

/// Shift so the lowest exponent is 0. Returns the shifted polynomial and the shift applied.
std::pair<LaurentPoly, LaurentPoly::Exponent> unit_normalize(const LaurentPoly& p);

/// Division with remainder of ordinary polynomials (exponents >= 0). The leading
/// coefficient of `divisor` must be a unit of the ring.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Divide by the leading coefficient (field rings only).
LaurentPoly make_monic(const LaurentPoly& p);

struct GcdResult {
  LaurentPoly g;  ///< monic, lowest exponent 0
  LaurentPoly u;
  LaurentPoly v;  ///< g = u*a + v*b exactly
};

/// Extended Euclid over the rational numbers. Integer inputs are embedded in Q;
/// Z/p inputs are handled over F_p; composite Z/m is rejected.
GcdResult poly_gcd_over_rationals(const LaurentPoly& a, const LaurentPoly& b);

/// Extended Euclid over the (field) ring the inputs already live in.
GcdResult poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

struct IntegerBezout {
  LaurentPoly u;
  LaurentPoly v;
  Integer n;  ///< least positive common denominator; u = n*u_in, v = n*v_in
};

IntegerBezout bezout_integer_clearing(const LaurentPoly& u, const LaurentPoly& v);

}  // namespace cuphom
