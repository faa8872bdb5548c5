#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "combmat/rational.hpp"

namespace combmat {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  /// x - root
  static Polynomial linear_factor(const Rational& root);
  static Polynomial constant(const Rational& c);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  /// Throws DomainError for the zero polynomial.
  const Rational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == Rational(1); }

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  /// Throws DomainError for the zero polynomial.
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Highest degree first in the variable λ, e.g. "λ^2 - (1/3)λ + 1/9".
  std::string str(const std::string& var = "\xCE\xBB") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
DivMod divmod(const Polynomial& num, const Polynomial& den);

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace combmat
