#pragma once

#include <cstddef>
#include <optional>

#include "combmat/matrix.hpp"

namespace combmat {

/// C(A) = A ∘ A^{-T} together with its source and det A.
struct CombinedResult {
  Matrix source;
  Matrix combined;
  Rational det_source;
};

/// Hadamard route: hadamard(A, transpose(inverse(A))). Throws SingularMatrix.
CombinedResult combined(const Matrix& a);

/// Cofactor route: entry (i,j) = (-1)^(i+j) a_ij minor(A,i,j) / det A.
Matrix combined_via_cofactors(const Matrix& a);

/// (1/det A) * sum_i a_ii minor(A,i,i), without forming C(A).
Rational combined_trace(const Matrix& a);

/// Result of testing C * (1,...,1)^T == (1,...,1)^T.
struct FixedVectorCheck {
  bool holds = true;
  std::size_t violating_row = 0;  // 1-based; meaningful only when !holds
};

FixedVectorCheck fixed_eigenpair_check(const Matrix& c);
/// Same test applied to columns (i.e. to C^T).
FixedVectorCheck column_sum_check(const Matrix& c);

/// C(R(A)) == R(C(A)).
bool reversing_commutes(const Matrix& a);

enum class OrthogonalShortcut {
  orthogonal_and_matches,
  orthogonal_mismatch,  // A A^T = I yet C(A) != A ∘ A; never expected
  not_orthogonal,
};

/// If A A^T = I, compares C(A) with A ∘ A. Makes no claim otherwise.
OrthogonalShortcut orthogonal_shortcut_check(const Matrix& a);

bool is_orthogonal(const Matrix& a);

/// C(T) == I for triangular T. Throws DomainError for non-triangular input and
/// SingularMatrix when a diagonal entry is zero.
bool triangular_identity_check(const Matrix& t);

}  // namespace combmat
