#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combmat/matrix.hpp"
#include "combmat/polynomial.hpp"

namespace combmat {

/// Galois group of a polynomial of degree <= 3 over Q, up to isomorphism.
enum class GaloisTag { identity, order_2, cyclic_3, sym_3, undetermined };

std::string to_string(GaloisTag tag);
/// Group order; 0 for undetermined.
unsigned tag_order(GaloisTag tag);

using RootMultiplicity = std::pair<Rational, std::size_t>;
using Vector = std::vector<Rational>;

struct EigenReport {
  Polynomial charpoly;
  Polynomial quotient;  // charpoly / (λ - 1)
  std::vector<RootMultiplicity> rational_eigenvalues;
  GaloisTag galois_tag = GaloisTag::undetermined;
  /// (1,1)^T and (1,-1)^T for the eigenvalues 1 and det C(A); n = 2 only.
  std::optional<std::array<Vector, 2>> eigenvectors_2x2;
};

/// p(1) != 0 where the polynomial had to vanish at 1.
class DeflationError : public Error {
 public:
  explicit DeflationError(Rational value)
      : Error("polynomial does not vanish at 1 (p(1) = " + value.str() + ")"), value_(std::move(value)) {}
  const Rational& value_at_one() const noexcept { return value_; }

 private:
  Rational value_;
};

/// Monic det(λI - M) via the Faddeev-LeVerrier recurrence:
///   N_0 = 0, c_n = 1,
///   N_k = M N_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(M N_k) / k.
/// This is (-1)^n det(M - λI); the roots are the same.
Polynomial charpoly(const Matrix& m);

/// q with (λ - 1) q = p. Throws DeflationError when p(1) != 0.
Polynomial deflate_at_one(const Polynomial& p);

/// All rational roots with multiplicity, ascending. Throws DomainError for the
/// zero polynomial.
std::vector<RootMultiplicity> rational_roots(const Polynomial& p);

/// b^2 - 4ac.
Rational quadratic_discriminant(const Polynomial& q);
/// b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 abcd.
Rational cubic_discriminant(const Polynomial& q);

/// Identity for degree <= 1, decided by discriminants for degrees 2 and 3,
/// undetermined above.
GaloisTag galois_tag(const Polynomial& q);

/// Spectral data of a combined matrix by the general path: charpoly,
/// deflation at 1, rational roots, tag; eigenvectors only when n = 2.
/// Throws DeflationError when c does not fix the all-ones vector's eigenvalue.
EigenReport eigen_report(const Matrix& c);

/// Closed-form theory of a nonsingular 2x2 A, built from the entries of A only.
struct Combined2Report {
  Rational det_c;  // det C(A) = (a11 a22 + a12 a21) / det A
  EigenReport eigen;
  Matrix p;      // columns (1,1)^T, (-1,1)^T
  Matrix d;      // diag(1, det C(A))
  Matrix p_inv;  // 1/2 [[1,1],[-1,1]]
};

/// Throws ShapeError unless A is 2x2 and SingularMatrix when det A = 0.
Combined2Report combined2_closed_form(const Matrix& a);

struct Sl2Forms {
  Rational trace;  // 2 + 2 (det A) a12 a21
  Rational det_c;  // trace - 1
  Polynomial charpoly;
};

/// For 2x2 A with det A = ±1. Throws DomainError otherwise.
Sl2Forms sl2_closed_form(const Matrix& a);

/// P diag(f1, f2) P^{-1}, where f1 = f(1) and f2 = f(det C(A)).
Matrix matrix_function_2x2(const Matrix& a, const Rational& f1, const Rational& f2);

}  // namespace combmat
