#pragma once

#include "cliffspec/field_kernels.hpp"
#include "cliffspec/jacobi.hpp"
#include "cliffspec/pauli.hpp"
#include "cliffspec/types.hpp"

#include <array>

namespace cliffspec {

/// Scalars derived from canonical parameters that control the determinant
/// quartic D(x) and its zero set:
///
///   beta    = ||a||^2 + |alpha|^2
///   delta   = |alpha2 a23 + i conj(alpha3) a33|
///   c       = ||a||^4 - 2 |alpha|^2 ||a||^2 + 4 delta^2
///               + |alpha2^2 - conj(alpha3)^2|^2          (D at the center)
///   d       = ||a||^2 |alpha|^2 - delta^2 + Re(alpha2 alpha3)^2
///   e       = ||a||^4 - c                                 (hyperboloid offset)
///   f       = sqrt((|alpha2|^2 - |alpha3|^2)^2 + 4 Im(alpha2 alpha3)^2)
///   coupling: the symmetric 3x3 matrix with top eigenpair (lambda0, x0)
///             that scales the non-emptiness witness.
///
/// The struct also carries the canonical data it was computed from.
struct QuarticInvariants {
    Vec3 center;
    Vec3 a;
    cplx alpha2, alpha3;

    double norm_a_sq = 0.0;
    double alpha_sq = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double c = 0.0;
    double d = 0.0;
    double e = 0.0;
    double f = 0.0;
    std::array<std::array<double, 3>, 3> coupling{};
    double lambda0 = 0.0;
    Vec3 x0;
};

QuarticInvariants invariants(const CanonicalParams& p);

/// Determinant of the localizer in closed form, trace centers included.
double D_full(const CanonicalParams& p, const Vec3& x);

/// Centered closed form ||x||^4 + 2 beta ||x||^2 - 4 <Ax, x> + c.
/// The invariants must come from trace-centered parameters; a nonzero
/// stored center raises internal_error (contract violation).
double D_reduced(const QuarticInvariants& inv, const Vec3& x);

/// Centered quartic at offset p from the symmetry center, without the
/// D_reduced centering contract. Shared by the witness and surface code.
double D_at_offset(const QuarticInvariants& inv, const Vec3& p);

/// Point the level surfaces of D are symmetric about.
Vec3 symmetry_center(const CanonicalParams& p);

/// Coefficients for the row kernels, in the layout field_row_* expect.
QuarticFieldCoeffs field_coeffs(const QuarticInvariants& inv);

} // namespace cliffspec
