#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "combmat/rational.hpp"

namespace combmat {

/// Dense row-major matrix of exact rationals.
///
/// Element access through operator() is 0-based. Functions that take matrix
/// indices as parameters (minor, cofactor) use 1-based indices, and every
/// error message reports 1-based positions.
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);
  static Matrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> entries() const noexcept { return entries_; }
  std::span<const Rational> row(std::size_t i) const {
    return std::span<const Rational>(entries_).subspan(i * cols_, cols_);
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// The two anti-diagonal permutation matrices conjugating A into its
/// 180-degree rotation: reversing(A) = m_rc * A * m_rr.
struct ReversingPair {
  Matrix m_rc;  // [delta_{n-i+1, j}]
  Matrix m_rr;  // [delta_{i, n-j+1}]
};

/// Thrown when an operation needs a nonsingular matrix. Carries the
/// determinant that was found (always zero).
class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix (det = 0)") {}
  Rational det() const { return Rational(0); }
};

void require_square(const Matrix& a, const char* op);

Matrix transpose(const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Rational& c);
std::vector<Rational> mat_vec(const Matrix& a, std::span<const Rational> v);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return subtract(a, b); }
inline Matrix operator*(const Rational& c, const Matrix& a) { return scale(a, c); }

Rational trace(const Matrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// row denominators. det of the 0x0 matrix is 1.
Rational det(const Matrix& a);

/// Matrix with 1-based row i and column j removed.
Matrix submatrix(const Matrix& a, std::size_t i, std::size_t j);
/// det(submatrix(a, i, j)); requires n >= 2 and 1-based indices in range.
Rational minor(const Matrix& a, std::size_t i, std::size_t j);
/// (-1)^(i+j) * minor(a, i, j).
Rational cofactor(const Matrix& a, std::size_t i, std::size_t j);
/// Transpose of the cofactor matrix.
Matrix adjugate(const Matrix& a);

/// adj(A) / det(A). Throws SingularMatrix.
Matrix inverse_adjugate(const Matrix& a);
/// Gauss-Jordan elimination over Q. Throws SingularMatrix.
Matrix inverse_elimination(const Matrix& a);
/// Adjugate route for n <= 4, elimination above.
Matrix inverse(const Matrix& a);

ReversingPair reversing_pair(std::size_t n);
/// result(i, j) = a(n-1-i, n-1-j).
Matrix reversing(const Matrix& a);

bool is_upper_triangular(const Matrix& a);
bool is_lower_triangular(const Matrix& a);
bool is_diagonal(const Matrix& a);
/// Diagonal matrix holding the diagonal of a square matrix.
Matrix diagonal_part(const Matrix& a);

}  // namespace combmat
