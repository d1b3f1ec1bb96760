#include "cliffspec/localizer.hpp"

#include <cmath>
#include <string>

namespace cliffspec {

namespace {

// kron(A, B) with A indexing the 2x2 blocks.
void add_kron(Matrix4C& out, const Mat2& a, const Mat2& b) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) += a(i, j) * b(k, l);
}

} // namespace

Matrix4C build_localizer(const HermitianTriple& t, const Vec3& x) {
    if (!is_finite(x.x) || !is_finite(x.y) || !is_finite(x.z))
        throw validation_error("localizer point has non-finite coordinates");

    const Mat2 id = Mat2::identity();
    Matrix4C L;
    add_kron(L, t.a1 - id * cplx(x.x, 0.0), pauli_sigma(1));
    add_kron(L, t.a2 - id * cplx(x.y, 0.0), pauli_sigma(2));
    add_kron(L, t.a3 - id * cplx(x.z, 0.0), pauli_sigma(3));
    return L;
}

double det_matrix4(const Matrix4C& m, const char* what) {
    // LU with partial pivoting; determinant is the signed product of pivots.
    cplx a[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a[r][c] = m(r, c);

    cplx det = 1.0;
    int sign = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        double best = std::abs(a[col][col]);
        for (int r = col + 1; r < 4; ++r) {
            const double v = std::abs(a[r][col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < 4; ++c) std::swap(a[piv][c], a[col][c]);
            sign = -sign;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const cplx f = a[r][col] / a[col][col];
            for (int c = col + 1; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    det *= static_cast<double>(sign);

    if (std::abs(det.imag()) > 1e-9 * (1.0 + std::abs(det)))
        throw internal_error(std::string(what) + ": determinant has imaginary part " +
                             std::to_string(det.imag()) + ", expected a real value");
    return det.real();
}

double det_localizer(const HermitianTriple& t, const Vec3& x) {
    return det_matrix4(build_localizer(t, x), "det_localizer");
}

SingularRange localizer_singular_range(const HermitianTriple& t, const Vec3& x) {
    const auto ev = hermitian4_eigenvalues(build_localizer(t, x));
    double lo = std::abs(ev[0]);
    double hi = lo;
    for (int i = 1; i < 4; ++i) {
        const double v = std::abs(ev[i]);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

double localizer_gap(const HermitianTriple& t, const Vec3& x) {
    return localizer_singular_range(t, x).smallest;
}

double quadratic_form_gap(const HermitianTriple& t, const Vec3& x) {
    const Mat2 id = Mat2::identity();
    const Mat2 d1 = t.a1 - id * cplx(x.x, 0.0);
    const Mat2 d2 = t.a2 - id * cplx(x.y, 0.0);
    const Mat2 d3 = t.a3 - id * cplx(x.z, 0.0);
    const Mat2 q = d1 * d1 + d2 * d2 + d3 * d3;
    return hermitian2_eigenvalues(q)[0];
}

} // namespace cliffspec
