#include "combmat/combined.hpp"

namespace combmat {

namespace {

Rational nonzero_det(const Matrix& a, const char* op) {
  require_square(a, op);
  Rational d = det(a);
  if (d.is_zero()) throw SingularMatrix();
  return d;
}

}  // namespace

CombinedResult combined(const Matrix& a) {
  Rational d = nonzero_det(a, "combined");
  Matrix c = hadamard(a, transpose(inverse(a)));
  return {a, std::move(c), std::move(d)};
}

Matrix combined_via_cofactors(const Matrix& a) {
  const Rational d = nonzero_det(a, "combined_via_cofactors");
  const std::size_t n = a.rows();
  if (n == 1) return Matrix{{1}};
  const Rational inv_d = d.reciprocal();
  Matrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const Rational& aij = a(i - 1, j - 1);
      if (aij.is_zero()) continue;
      m(i - 1, j - 1) = aij * cofactor(a, i, j) * inv_d;
    }
  }
  return m;
}

Rational combined_trace(const Matrix& a) {
  const Rational d = nonzero_det(a, "combined_trace");
  const std::size_t n = a.rows();
  if (n == 1) return Rational(1);
  Rational sum;
  for (std::size_t i = 1; i <= n; ++i) sum += a(i - 1, i - 1) * minor(a, i, i);
  return sum / d;
}

FixedVectorCheck fixed_eigenpair_check(const Matrix& c) {
  require_square(c, "fixed_eigenpair_check");
  for (std::size_t i = 0; i < c.rows(); ++i) {
    Rational s;
    for (const auto& x : c.row(i)) s += x;
    if (s != Rational(1)) return {false, i + 1};
  }
  return {};
}

FixedVectorCheck column_sum_check(const Matrix& c) { return fixed_eigenpair_check(transpose(c)); }

bool reversing_commutes(const Matrix& a) {
  return combined(reversing(a)).combined == reversing(combined(a).combined);
}

bool is_orthogonal(const Matrix& a) {
  return a.is_square() && matmul(a, transpose(a)) == Matrix::identity(a.rows());
}

OrthogonalShortcut orthogonal_shortcut_check(const Matrix& a) {
  nonzero_det(a, "orthogonal_shortcut_check");
  if (!is_orthogonal(a)) return OrthogonalShortcut::not_orthogonal;
  return combined(a).combined == hadamard(a, a) ? OrthogonalShortcut::orthogonal_and_matches
                                                : OrthogonalShortcut::orthogonal_mismatch;
}

bool triangular_identity_check(const Matrix& t) {
  require_square(t, "triangular_identity_check");
  if (!is_upper_triangular(t) && !is_lower_triangular(t)) {
    throw DomainError("triangular_identity_check: matrix is not triangular");
  }
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t(i, i).is_zero()) throw SingularMatrix();
  }
  return combined(t).combined == Matrix::identity(t.rows());
}

}  // namespace combmat
