#pragma once

// Test-only reference implementations. Each one takes a different route from
// the library code it checks and uses nothing from the library beyond the
// Rational and Matrix value types.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "combmat/matrix.hpp"

namespace oracle {

using combmat::Integer;
using combmat::Matrix;
using combmat::Rational;

/// Laplace expansion along the first row. Exponential; small n only.
inline Rational det_laplace(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return a(0, 0);
  Rational sum;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Matrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, sc = 0; c < n; ++c)
        if (c != j) sub(r - 1, sc++) = a(r, c);
    const Rational term = a(0, j) * det_laplace(sub);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

/// Product computed as dot products of rows with columns.
inline Matrix matmul_dot(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

// Polynomials as ascending coefficient vectors, untrimmed.
using Poly = std::vector<Rational>;

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

/// det(λI - M) by Laplace expansion over polynomial entries.
inline Poly charpoly_laplace(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Poly> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      entries[i * n + j] = i == j ? Poly{-m(i, j), Rational(1)} : Poly{-m(i, j)};
    }
  struct Rec {
    static Poly det(const std::vector<Poly>& e, std::size_t n) {
      if (n == 0) return {Rational(1)};
      if (n == 1) return e[0];
      Poly sum;
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Poly> sub;
        for (std::size_t r = 1; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (c != j) sub.push_back(e[r * n + c]);
        Poly term = poly_mul(e[j], det(sub, n - 1));
        if (j % 2 == 1) {
          for (auto& x : term) x = -x;
        }
        sum = poly_add(sum, term);
      }
      return sum;
    }
  };
  return poly_trim(Rec::det(entries, n));
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<long> divisors(long v) {
  v = v < 0 ? -v : v;
  std::vector<long> d;
  for (long k = 1; k <= v; ++k)
    if (v % k == 0) d.push_back(k);
  return d;
}

/// Rational roots with multiplicity by the rational root theorem: every
/// candidate ±p/q, p | a_0, q | a_d, is tested after clearing denominators.
/// Small integer coefficients only.
inline std::vector<std::pair<Rational, std::size_t>> rational_roots_bruteforce(Poly p) {
  p = poly_trim(std::move(p));
  std::vector<std::pair<Rational, std::size_t>> out;
  std::size_t zero_mult = 0;
  while (p.size() > 1 && p[0].is_zero()) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult) out.emplace_back(Rational(0), zero_mult);
  if (p.size() <= 1) return out;
  Integer l = 1;
  for (const auto& c : p) l = lcm(l, c.den());
  const long a0 = (p.front() * Rational(l)).num().get_si();
  const long ad = (p.back() * Rational(l)).num().get_si();
  std::vector<Rational> cands;
  for (long num : divisors(a0))
    for (long den : divisors(ad)) {
      cands.emplace_back(num, den);
      cands.emplace_back(-num, den);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& r : cands) {
    // Multiplicity: count vanishing derivatives.
    std::size_t mult = 0;
    Poly d = p;
    while (d.size() > 1 && poly_eval(d, r).is_zero()) {
      ++mult;
      Poly next;
      for (std::size_t k = 1; k < d.size(); ++k) next.push_back(d[k] * Rational(static_cast<long>(k)));
      d = next;
    }
    if (mult) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Test-side random source, independent of the library samplers.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

  Rational rational(long bound = 5) { return Rational(integer(-bound, bound), integer(1, bound)); }

  Rational nonzero(long bound = 5) {
    for (;;) {
      Rational r = rational(bound);
      if (!r.is_zero()) return r;
    }
  }

  Matrix matrix(std::size_t rows, std::size_t cols, long bound = 5) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(bound);
    return m;
  }

  Matrix nonsingular(std::size_t n, long bound = 5) {
    for (;;) {
      Matrix m = matrix(n, n, bound);
      if (!det_laplace_small(m).is_zero()) return m;
    }
  }

  Matrix triangular(std::size_t n, bool upper, long bound = 5) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          m(i, j) = nonzero(bound);
        } else if (upper ? j > i : j < i) {
          m(i, j) = rational(bound);
        }
      }
    return m;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  static Rational det_laplace_small(const Matrix& m) { return det_laplace(m); }
  std::mt19937_64 eng_;
};

}  // namespace oracle
