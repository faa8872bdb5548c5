#include "combmat/matrix.hpp"

#include <string>
#include <utility>

namespace combmat {

namespace {

std::string shape_str(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + shape_str(a) + " vs " + shape_str(b));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                     std::to_string(entries_.size()) + " entries");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw ShapeError(std::string(op) + ": square matrix required, got " + shape_str(a));
  }
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions differ " + shape_str(a) + " * " + shape_str(b));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "hadamard");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "subtract");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Matrix scale(const Matrix& a, const Rational& c) {
  Matrix s = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) *= c;
  return s;
}

std::vector<Rational> mat_vec(const Matrix& a, std::span<const Rational> v) {
  if (v.size() != a.cols()) throw ShapeError("mat_vec: vector length mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Rational trace(const Matrix& a) {
  require_square(a, "trace");
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Rational det(const Matrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);

  // Scale each row to integers, then run Bareiss on the integer matrix.
  std::vector<Integer> m(n * n);
  Integer row_scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer d = a(i, j).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = a(i, j).num() * (l / a(i, j).den());
    }
    row_scale_product *= l;
  }

  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return Rational(0);
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Integer d = at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return Rational(d, row_scale_product);
}

Matrix submatrix(const Matrix& a, std::size_t i, std::size_t j) {
  if (i < 1 || i > a.rows() || j < 1 || j > a.cols()) {
    throw IndexError("index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range for " + shape_str(a) + " matrix");
  }
  Matrix s(a.rows() - 1, a.cols() - 1);
  for (std::size_t r = 0, sr = 0; r < a.rows(); ++r) {
    if (r == i - 1) continue;
    for (std::size_t c = 0, sc = 0; c < a.cols(); ++c) {
      if (c == j - 1) continue;
      s(sr, sc++) = a(r, c);
    }
    ++sr;
  }
  return s;
}

Rational minor(const Matrix& a, std::size_t i, std::size_t j) {
  require_square(a, "minor");
  if (a.rows() < 2) throw ShapeError("minor: matrix of order >= 2 required");
  return det(submatrix(a, i, j));
}

Rational cofactor(const Matrix& a, std::size_t i, std::size_t j) {
  Rational m = minor(a, i, j);
  return (i + j) % 2 == 0 ? m : -m;
}

Matrix adjugate(const Matrix& a) {
  require_square(a, "adjugate");
  const std::size_t n = a.rows();
  if (n == 0) return Matrix();
  if (n == 1) return Matrix{{1}};
  Matrix adj(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) adj(j - 1, i - 1) = cofactor(a, i, j);
  return adj;
}

Matrix inverse_adjugate(const Matrix& a) {
  require_square(a, "inverse");
  const Rational d = det(a);
  if (d.is_zero()) throw SingularMatrix();
  return scale(adjugate(a), d.reciprocal());
}

Matrix inverse_elimination(const Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && work(p, k).is_zero()) ++p;
    if (p == n) throw SingularMatrix();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(k, j), work(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const Rational pivot_inv = work(k, k).reciprocal();
    for (std::size_t j = 0; j < n; ++j) {
      work(k, j) *= pivot_inv;
      inv(k, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || work(i, k).is_zero()) continue;
      const Rational f = work(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

Matrix inverse(const Matrix& a) {
  require_square(a, "inverse");
  return a.rows() <= 4 ? inverse_adjugate(a) : inverse_elimination(a);
}

ReversingPair reversing_pair(std::size_t n) {
  ReversingPair p{Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    p.m_rc(n - 1 - i, i) = 1;
    p.m_rr(i, n - 1 - i) = 1;
  }
  return p;
}

Matrix reversing(const Matrix& a) {
  require_square(a, "reversing");
  const std::size_t n = a.rows();
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(n - 1 - i, n - 1 - j);
  return r;
}

bool is_upper_triangular(const Matrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

bool is_lower_triangular(const Matrix& a) { return is_upper_triangular(transpose(a)); }

bool is_diagonal(const Matrix& a) { return is_upper_triangular(a) && is_lower_triangular(a); }

Matrix diagonal_part(const Matrix& a) {
  require_square(a, "diagonal_part");
  Matrix d(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) d(i, i) = a(i, i);
  return d;
}

}  // namespace combmat
