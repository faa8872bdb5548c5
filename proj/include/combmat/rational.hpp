#pragma once

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "combmat/error.hpp"

namespace combmat {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is stored as 0/1, so two Rationals are equal iff their
/// stored numerators and denominators are equal.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : value_(widen(value)) {}
  explicit Rational(const Integer& value) : value_(value) {}
  /// Throws DivisionByZero when den == 0.
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  Rational(int num, int den) : Rational(Integer(num), Integer(den)) {}

  /// Accepts "p", "p/q", with an optional leading '-' (ASCII or U+2212).
  /// Throws ParseError on malformed text or q == 0.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Throws DivisionByZero for zero.
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DivisionByZero when rhs == 0.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when q == 1.
  std::string str() const;

  const mpq_class& gmp() const { return value_; }

 private:
  template <std::integral T>
  static mpz_class widen(T value) {
    if constexpr (std::is_signed_v<T>) {
      return mpz_class(static_cast<long>(value));
    } else {
      return mpz_class(static_cast<unsigned long>(value));
    }
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class ArithKind { add, sub, mul, div };

/// One of the four field operations; division by zero throws DivisionByZero.
Rational rat_arith(const Rational& a, const Rational& b, ArithKind kind);

/// The non-negative rational square root of `a`, if `a` is the square of a
/// rational. Uses exact integer square roots only.
std::optional<Rational> rat_is_square(const Rational& a);

Rational abs(const Rational& r);

/// Non-negative integer square root test: returns r with r*r == n, if any.
std::optional<Integer> exact_isqrt(const Integer& n);

}  // namespace combmat
