#pragma once

#include "cliffspec/types.hpp"

#include <array>

namespace cliffspec {

/// Dense 4x4 complex matrix, row major.
struct Matrix4C {
    std::array<cplx, 16> e{};

    cplx& operator()(int r, int c) { return e[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[4 * r + c]; }

    Matrix4C adjoint() const {
        Matrix4C m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    double max_abs_diff(const Matrix4C& o) const {
        double m = 0.0;
        for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(e[i] - o.e[i]));
        return m;
    }
};

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi with complex
/// rotations. Sweeps run in a fixed (p,q) order until every off-diagonal
/// magnitude is at most 1e-14 * ||M||_F. Output is ascending.
/// `a` is row major n x n; n <= 8.
void jacobi_hermitian_eigenvalues(const cplx* a, int n, double* eigenvalues_ascending);

std::array<double, 4> hermitian4_eigenvalues(const Matrix4C& m);
std::array<double, 2> hermitian2_eigenvalues(const Mat2& m);

/// Eigendecomposition of a real symmetric 3x3 matrix by cyclic Jacobi.
/// values are ascending; vectors[.][k] is the unit eigenvector column for
/// values[k]. The sweep order is fixed, so results are deterministic.
struct Sym3Eigen {
    std::array<double, 3> values;
    std::array<std::array<double, 3>, 3> vectors;
};

Sym3Eigen jacobi_sym3(const std::array<std::array<double, 3>, 3>& m);

} // namespace cliffspec
