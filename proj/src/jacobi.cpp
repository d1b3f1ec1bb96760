#include "cliffspec/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace cliffspec {

namespace {

constexpr double kOffTolFactor = 1e-14;
constexpr int kMaxSweeps = 100;

double frobenius(const cplx* a, int n) {
    double s = 0.0;
    for (int i = 0; i < n * n; ++i) s += std::norm(a[i]);
    return std::sqrt(s);
}

double max_offdiag(const cplx* a, int n) {
    double m = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) m = std::max(m, std::abs(a[p * n + q]));
    return m;
}

// One complex Jacobi rotation zeroing a[p][q]. The rotation is
//   V[p][p] = c, V[p][q] = -conj(s), V[q][p] = s, V[q][q] = c
// with c real and |c|^2 + |s|^2 = 1, applied as A <- V* A V.
void rotate(cplx* a, int n, int p, int q) {
    const cplx apq = a[p * n + q];
    const double mag = std::abs(apq);
    if (mag == 0.0) return;

    const double app = a[p * n + p].real();
    const double aqq = a[q * n + q].real();
    const double tau = (aqq - app) / (2.0 * mag);
    // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
    double t;
    if (tau >= 0.0)
        t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double sigma = t * c;
    // s carries the phase of a[p][q] so the rotated (p,q) entry vanishes
    const cplx s = sigma * (apq / mag);

    for (int k = 0; k < n; ++k) {
        const cplx akp = a[k * n + p];
        const cplx akq = a[k * n + q];
        a[k * n + p] = c * akp + std::conj(s) * akq;
        a[k * n + q] = -s * akp + c * akq;
    }
    for (int k = 0; k < n; ++k) {
        const cplx apk = a[p * n + k];
        const cplx aqk = a[q * n + k];
        a[p * n + k] = c * apk + s * aqk;
        a[q * n + k] = -std::conj(s) * apk + c * aqk;
    }
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    a[p * n + p] = cplx(a[p * n + p].real(), 0.0);
    a[q * n + q] = cplx(a[q * n + q].real(), 0.0);
}

} // namespace

void jacobi_hermitian_eigenvalues(const cplx* a_in, int n, double* out) {
    cplx a[64];
    for (int i = 0; i < n * n; ++i) a[i] = a_in[i];
    // Work on the exact Hermitian average so diagonals are real.
    for (int p = 0; p < n; ++p) {
        a[p * n + p] = cplx(a[p * n + p].real(), 0.0);
        for (int q = p + 1; q < n; ++q) {
            const cplx v = 0.5 * (a[p * n + q] + std::conj(a[q * n + p]));
            a[p * n + q] = v;
            a[q * n + p] = std::conj(v);
        }
    }

    const double tol = kOffTolFactor * frobenius(a, n);
    int sweeps = 0;
    while (max_offdiag(a, n) > tol) {
        if (++sweeps > kMaxSweeps) throw internal_error("jacobi: no convergence");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) rotate(a, n, p, q);
    }

    for (int i = 0; i < n; ++i) out[i] = a[i * n + i].real();
    std::sort(out, out + n);
}

std::array<double, 4> hermitian4_eigenvalues(const Matrix4C& m) {
    std::array<double, 4> out{};
    jacobi_hermitian_eigenvalues(m.e.data(), 4, out.data());
    return out;
}

std::array<double, 2> hermitian2_eigenvalues(const Mat2& m) {
    std::array<double, 2> out{};
    jacobi_hermitian_eigenvalues(m.e.data(), 2, out.data());
    return out;
}

Sym3Eigen jacobi_sym3(const std::array<std::array<double, 3>, 3>& m_in) {
    double a[3][3];
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a[r][c] = 0.5 * (m_in[r][c] + m_in[c][r]);

    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    double fro = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) fro += a[r][c] * a[r][c];
    const double tol = kOffTolFactor * std::sqrt(fro);

    auto offmax = [&]() {
        return std::max({std::abs(a[0][1]), std::abs(a[0][2]), std::abs(a[1][2])});
    };

    int sweeps = 0;
    while (offmax() > tol) {
        if (++sweeps > kMaxSweeps) throw internal_error("jacobi_sym3: no convergence");
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
                double t;
                if (tau >= 0.0)
                    t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp + s * akq;
                    a[k][q] = -s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk + s * aqk;
                    a[q][k] = -s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v[k][p];
                    const double vkq = v[k][q];
                    v[k][p] = c * vkp + s * vkq;
                    v[k][q] = -s * vkp + c * vkq;
                }
            }
        }
    }

    int order[3] = {0, 1, 2};
    std::sort(order, order + 3, [&](int i, int j) { return a[i][i] < a[j][j]; });

    Sym3Eigen out;
    for (int k = 0; k < 3; ++k) {
        out.values[k] = a[order[k]][order[k]];
        for (int r = 0; r < 3; ++r) out.vectors[r][k] = v[r][order[k]];
    }
    return out;
}

} // namespace cliffspec
