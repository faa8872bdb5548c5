#include "combmat/rational.hpp"

#include <cctype>
#include <ostream>

namespace combmat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.starts_with('-')) {
    negative = true;
    s.remove_prefix(1);
  } else if (s.starts_with(kUnicodeMinus)) {
    negative = true;
    s.remove_prefix(kUnicodeMinus.size());
  }
  std::string_view num_part = s;
  std::string_view den_part = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num_part = s.substr(0, slash);
    den_part = s.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  }
  Integer num(std::string(num_part), 10);
  Integer den(std::string(den_part), 10);
  if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / value_);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rat_arith(const Rational& a, const Rational& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
    case ArithKind::div:
      return a / b;
  }
  throw DomainError("unknown arithmetic kind");
}

std::optional<Integer> exact_isqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  if (root * root != n) return std::nullopt;
  return root;
}

std::optional<Rational> rat_is_square(const Rational& a) {
  // In lowest terms p/q is a square iff p and q are both integer squares.
  auto p = exact_isqrt(a.num());
  if (!p) return std::nullopt;
  auto q = exact_isqrt(a.den());
  if (!q) return std::nullopt;
  return Rational(*p, *q);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace combmat
