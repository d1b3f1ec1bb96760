#pragma once

#include "cliffspec/jacobi.hpp"
#include "cliffspec/pauli.hpp"
#include "cliffspec/types.hpp"

namespace cliffspec {

/// sum_j (A_j - x_j I) (x) sigma_j, a Hermitian 4x4 matrix. The Clifford
/// representation is fixed to the Pauli matrices themselves.
Matrix4C build_localizer(const HermitianTriple& t, const Vec3& x);

/// Determinant of the localizer by LU with partial pivoting. The value is
/// real for Hermitian input; an imaginary part above 1e-9 * (1 + |det|)
/// raises internal_error.
double det_localizer(const HermitianTriple& t, const Vec3& x);
double det_matrix4(const Matrix4C& m, const char* what);

/// Smallest singular value of the localizer (smallest |eigenvalue| of the
/// Hermitian matrix, via Jacobi).
double localizer_gap(const HermitianTriple& t, const Vec3& x);

/// Smallest and largest singular value in one Jacobi pass.
struct SingularRange {
    double smallest;
    double largest;
};
SingularRange localizer_singular_range(const HermitianTriple& t, const Vec3& x);

/// Smallest eigenvalue of Q_x = sum_j (A_j - x_j I)^2. Nonnegative up to
/// round-off; a joint eigenvector at x makes it exactly zero.
double quadratic_form_gap(const HermitianTriple& t, const Vec3& x);

} // namespace cliffspec
