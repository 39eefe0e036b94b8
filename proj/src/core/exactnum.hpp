// Copyright 2026 The egypt Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef EGYPT_CORE_EXACTNUM_HPP
#define EGYPT_CORE_EXACTNUM_HPP

// Exact arithmetic: GMP integers, reduced rationals, and elements a + b*sqrt(D)
// of a real quadratic field. Nothing in here touches floating point.

#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace egypt {

using Integer = mpz_class;

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& n);
// Number of decimal digits of |n| (1 for zero).
std::size_t decimal_length(const Integer& n);
// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

/// A rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  const Integer& num() const { return num_ref(); }
  const Integer& den() const { return den_ref(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Integer floor() const;
  Integer ceil() const;
  // floor(x + 1/2): ties go toward +infinity.
  Integer nearest_int() const;
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  friend bool operator==(const Rational& x, const Rational& y) {
    return cmp(x.value_, y.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  const Integer& num_ref() const;
  const Integer& den_ref() const;

  mpq_class value_;
};

Integer rat_nearest_int(const Rational& x);

/// a + b*sqrt(D) with D a positive non-square integer.
class QuadraticValue {
 public:
  // Throws InvalidRadicand unless D > 0 and D is not a perfect square.
  QuadraticValue(Rational a, Rational b, Integer radicand);
  static QuadraticValue from_rational(Rational a, const Integer& radicand);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  Integer nearest_int() const;

  QuadraticValue conjugate() const { return {a_, -b_, d_, Unchecked{}}; }
  // a^2 - D b^2
  Rational norm() const;
  QuadraticValue inverse() const;

  QuadraticValue operator-() const { return {-a_, -b_, d_, Unchecked{}}; }
  friend QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y);
  friend QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y);
  friend QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y);
  friend QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y);
  friend bool operator==(const QuadraticValue& x, const QuadraticValue& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  // "(A+B sqrt D)/E" over a common denominator; parseable by parse_value.
  std::string str() const;

 private:
  struct Unchecked {};
  QuadraticValue(Rational a, Rational b, Integer radicand, Unchecked)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {}

  Rational a_;
  Rational b_;
  Integer d_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

QuadraticValue quad_arith(const QuadraticValue& x, const QuadraticValue& y, ArithOp op);
int quad_sign(const QuadraticValue& x);
Integer quad_nearest_int(const QuadraticValue& x);
// Correctly rounded (ties toward +infinity) with exactly 'digits' decimals.
std::string quad_to_decimal(const QuadraticValue& x, unsigned digits);

/// Either a rational or a quadratic irrational. Results whose irrational part
/// cancels are demoted back to Rational.
class Value {
 public:
  Value() = default;
  Value(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Value(long n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Value(QuadraticValue q);  // NOLINT(google-explicit-constructor)

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const QuadraticValue& quadratic() const { return std::get<QuadraticValue>(v_); }

  int sign() const;
  Integer floor() const;
  Integer ceil() const;
  Integer nearest_int() const;
  Value inverse() const;
  Value operator-() const;

  friend Value operator+(const Value& x, const Value& y);
  friend Value operator-(const Value& x, const Value& y);
  friend Value operator*(const Value& x, const Value& y);
  friend Value operator/(const Value& x, const Value& y);
  friend bool operator==(const Value& x, const Value& y) { return x.v_ == y.v_; }

  std::string str() const;
  std::string decimal(unsigned digits) const;

 private:
  std::variant<Rational, QuadraticValue> v_;
};

// Grammar: INT | INT/POSINT | ( INT (+|-) POSINT sqrt POSINT ) / POSINT,
// whitespace allowed between tokens.
Value parse_value(std::string_view text);

}  // namespace egypt

#endif  // EGYPT_CORE_EXACTNUM_HPP
