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
 * @file ring.hpp
 * @brief Coefficient rings Z, Q and Z/m, plus the error types shared by the library.
 *
 * Every coefficient is carried as a GMP rational. For Z and Z/m the value is
 * always an integer; for Z/m it is kept in the range [0, m).
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cuphom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed or inconsistent input (bad spec, wrong dimensions, unsupported ring).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands over different coefficient rings.
class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A computed invariant changed when the truncation power was raised.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoeffRing {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  CoeffRing() = default;

  static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
  static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0); }
  static CoeffRing integers_mod(std::int64_t m);

  /// Parses "Z", "Q" or "Zmod:<m>".
  static CoeffRing parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return is_field_; }
  bool is_finite() const noexcept { return kind_ == Kind::IntegersMod; }
  bool is_integers() const noexcept { return kind_ == Kind::Integers; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }

  /// Canonical representative of `value` in this ring. Throws InputError for a
  /// non-integral value in Z or in a composite Z/m (where denominators are not invertible).
  Rational normalize(const Rational& value) const;

  /// Multiplicative inverse; throws std::domain_error when `value` is not a unit.
  Rational inverse(const Rational& value) const;

  std::string name() const;

  friend bool operator==(const CoeffRing&, const CoeffRing&) = default;

 private:
  CoeffRing(Kind kind, std::int64_t modulus);

  Kind kind_ = Kind::Integers;
  std::int64_t modulus_ = 0;
  bool is_field_ = false;
};

bool is_prime(std::int64_t n);

/// Non-negative least common multiple.
Integer lcm(const Integer& a, const Integer& b);

}  // namespace cuphom
