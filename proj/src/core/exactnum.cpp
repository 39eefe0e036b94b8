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
#include "core/exactnum.hpp"

#include <cctype>
#include <utility>

#include "core/error.hpp"

namespace egypt {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) fail(ErrorCode::kParse, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      fail(ErrorCode::kParse, "expected an integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::size_t decimal_length(const Integer& n) {
  if (sgn(n) == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10.
  std::size_t len = mpz_sizeinbase(n.get_mpz_t(), 10);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, len - 1);
  return abs(n) < p ? len - 1 : len;
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) fail(ErrorCode::kInvalidArgument, "isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) fail(ErrorCode::kDivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

const Integer& Rational::num_ref() const { return value_.get_num(); }
const Integer& Rational::den_ref() const { return value_.get_den(); }

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

Integer Rational::nearest_int() const {
  // floor((2 num + den) / (2 den))
  Integer n = 2 * num() + den();
  Integer d = 2 * den();
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero");
  return Rational(den(), num());
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return to_string(num());
  return to_string(num()) + "/" + to_string(den());
}

Integer rat_nearest_int(const Rational& x) { return x.nearest_int(); }

// ---------------------------------------------------------- QuadraticValue

QuadraticValue::QuadraticValue(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (sgn(d_) <= 0 || is_perfect_square(d_)) {
    fail(ErrorCode::kInvalidRadicand,
         "radicand must be a positive non-square, got " + to_string(d_));
  }
}

QuadraticValue QuadraticValue::from_rational(Rational a, const Integer& radicand) {
  return QuadraticValue(std::move(a), Rational(), radicand);
}

int QuadraticValue::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the part with the larger square wins. Equality would make
  // D a rational square, which the constructor rules out.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

Integer QuadraticValue::floor() const {
  if (b_.is_zero()) return a_.floor();
  // With b = B/E and s = isqrt(B^2 D), b*sqrt(D) lies in [s/E, (s+1)/E) for
  // B > 0 and in (-(s+1)/E, -s/E] for B < 0. Either way x sits in an interval
  // [lo, lo + 1/E] of width at most 1, so floor(x) is floor(lo) or one more.
  const Integer& big_b = b_.num();
  const Integer& big_e = b_.den();
  const Integer s = isqrt(big_b * big_b * d_);
  const Rational lo = sgn(big_b) > 0 ? a_ + Rational(s, big_e)
                                     : a_ - Rational(s + 1, big_e);
  Integer cand = lo.floor();
  const QuadraticValue next = *this - from_rational(Rational(cand + 1), d_);
  if (next.sign() >= 0) cand += 1;
  return cand;
}

Integer QuadraticValue::ceil() const { return -((-*this).floor()); }

Integer QuadraticValue::nearest_int() const {
  if (b_.is_zero()) return a_.nearest_int();
  return (*this + from_rational(Rational(1, 2), d_)).floor();
}

Rational QuadraticValue::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadraticValue QuadraticValue::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero");
  return {a_ / n, -b_ / n, d_, Unchecked{}};
}

namespace {

void require_same_radicand(const QuadraticValue& x, const QuadraticValue& y) {
  if (x.radicand() != y.radicand()) {
    fail(ErrorCode::kRadicandMismatch, "sqrt " + to_string(x.radicand()) +
                                           " vs sqrt " + to_string(y.radicand()));
  }
}

}  // namespace

QuadraticValue operator+(const QuadraticValue& x, const QuadraticValue& y) {
  require_same_radicand(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, x.d_, QuadraticValue::Unchecked{}};
}

QuadraticValue operator-(const QuadraticValue& x, const QuadraticValue& y) {
  require_same_radicand(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, x.d_, QuadraticValue::Unchecked{}};
}

QuadraticValue operator*(const QuadraticValue& x, const QuadraticValue& y) {
  require_same_radicand(x, y);
  const Rational d(x.d_);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.d_,
          QuadraticValue::Unchecked{}};
}

QuadraticValue operator/(const QuadraticValue& x, const QuadraticValue& y) {
  require_same_radicand(x, y);
  return x * y.inverse();
}

std::string QuadraticValue::str() const {
  if (b_.is_zero()) return a_.str();
  Integer den = lcm(a_.den(), b_.den());
  Integer an = a_.num() * (den / a_.den());
  Integer bn = b_.num() * (den / b_.den());
  std::string out = "(" + to_string(an);
  out += sgn(bn) < 0 ? "-" : "+";
  out += to_string(abs(bn)) + " sqrt " + to_string(d_) + ")/" + to_string(den);
  return out;
}

QuadraticValue quad_arith(const QuadraticValue& x, const QuadraticValue& y, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return x + y;
    case ArithOp::kSub: return x - y;
    case ArithOp::kMul: return x * y;
    case ArithOp::kDiv: return x / y;
  }
  fail(ErrorCode::kInternal, "unknown arithmetic op");
}

int quad_sign(const QuadraticValue& x) { return x.sign(); }

Integer quad_nearest_int(const QuadraticValue& x) { return x.nearest_int(); }

namespace {

std::string format_scaled(const Integer& scaled, unsigned digits) {
  std::string body = to_string(abs(scaled));
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  if (digits > 0) body.insert(body.size() - digits, ".");
  return (sgn(scaled) < 0 ? "-" : "") + body;
}

Integer pow10(unsigned digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
  return p;
}

}  // namespace

std::string quad_to_decimal(const QuadraticValue& x, unsigned digits) {
  const Rational scale(pow10(digits));
  const QuadraticValue scaled = x * QuadraticValue::from_rational(scale, x.radicand());
  return format_scaled(scaled.nearest_int(), digits);
}

// ------------------------------------------------------------------- Value

Value::Value(QuadraticValue q) {
  if (q.is_rational()) {
    v_ = q.a();
  } else {
    v_ = std::move(q);
  }
}

namespace {

// Applies op in the quadratic field when either side is irrational.
template <typename RatOp, typename QuadOp>
Value combine(const Value& x, const Value& y, RatOp rat_op, QuadOp quad_op) {
  if (x.is_rational() && y.is_rational()) return Value(rat_op(x.rational(), y.rational()));
  const Integer& d = x.is_rational() ? y.quadratic().radicand() : x.quadratic().radicand();
  const QuadraticValue qx = x.is_rational() ? QuadraticValue::from_rational(x.rational(), d)
                                            : x.quadratic();
  const QuadraticValue qy = y.is_rational() ? QuadraticValue::from_rational(y.rational(), d)
                                            : y.quadratic();
  return Value(quad_op(qx, qy));
}

}  // namespace

int Value::sign() const {
  return is_rational() ? rational().sign() : quadratic().sign();
}

Integer Value::floor() const {
  return is_rational() ? rational().floor() : quadratic().floor();
}

Integer Value::ceil() const {
  return is_rational() ? rational().ceil() : quadratic().ceil();
}

Integer Value::nearest_int() const {
  return is_rational() ? rational().nearest_int() : quadratic().nearest_int();
}

Value Value::inverse() const {
  return is_rational() ? Value(rational().inverse()) : Value(quadratic().inverse());
}

Value Value::operator-() const {
  return is_rational() ? Value(-rational()) : Value(-quadratic());
}

Value operator+(const Value& x, const Value& y) {
  return combine(x, y, [](const Rational& a, const Rational& b) { return a + b; },
                 [](const QuadraticValue& a, const QuadraticValue& b) { return a + b; });
}

Value operator-(const Value& x, const Value& y) {
  return combine(x, y, [](const Rational& a, const Rational& b) { return a - b; },
                 [](const QuadraticValue& a, const QuadraticValue& b) { return a - b; });
}

Value operator*(const Value& x, const Value& y) {
  return combine(x, y, [](const Rational& a, const Rational& b) { return a * b; },
                 [](const QuadraticValue& a, const QuadraticValue& b) { return a * b; });
}

Value operator/(const Value& x, const Value& y) {
  return combine(x, y, [](const Rational& a, const Rational& b) { return a / b; },
                 [](const QuadraticValue& a, const QuadraticValue& b) { return a / b; });
}

std::string Value::str() const {
  return is_rational() ? rational().str() : quadratic().str();
}

std::string Value::decimal(unsigned digits) const {
  if (is_rational()) {
    return format_scaled((rational() * Rational(pow10(digits))).nearest_int(), digits);
  }
  return quad_to_decimal(quadratic(), digits);
}

// ----------------------------------------------------------------- parsing

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  Integer integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) error("expected digits");
    return parse_integer(text_.substr(start, pos_ - start));
  }
  Integer positive() {
    Integer n = integer(false);
    if (sgn(n) == 0) error("expected a positive integer");
    return n;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kParse, what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Value parse_value(std::string_view text) {
  Cursor cur(text);
  if (cur.accept('(')) {
    const Integer a = cur.integer(true);
    int sign = 0;
    if (cur.accept('+')) {
      sign = 1;
    } else if (cur.accept('-')) {
      sign = -1;
    } else {
      cur.error("expected '+' or '-'");
    }
    const Integer b = cur.integer(false);
    if (!cur.accept_word("sqrt")) cur.error("expected 'sqrt'");
    const Integer d = cur.positive();
    cur.expect(')');
    cur.expect('/');
    const Integer den = cur.positive();
    if (!cur.done()) cur.error("trailing input");
    return Value(QuadraticValue(Rational(a, den), Rational(sign * b, den), d));
  }
  const Integer num = cur.integer(true);
  Integer den = 1;
  if (cur.accept('/')) den = cur.positive();
  if (!cur.done()) cur.error("trailing input");
  return Value(Rational(num, den));
}

}  // namespace egypt
