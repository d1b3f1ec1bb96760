#include "cliffspec/pauli.hpp"

#include <cmath>

namespace cliffspec {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kPhaseTol = 1e-12;

Mat2 make_sigma(int k) {
    Mat2 m;
    switch (k) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw internal_error("pauli_sigma: index out of range");
    }
    return m;
}

/// Eigendecomposition of a validated Hermitian 2x2 matrix.
/// Columns of `vectors` are orthonormal eigenvectors for values[0] >= values[1],
/// each with its first component above kPhaseTol made real positive.
struct Eigen2 {
    std::array<double, 2> values;
    Mat2 vectors;
};

cplx fix_phase(cplx lead) {
    double m = std::abs(lead);
    if (m <= kPhaseTol) return cplx(1.0, 0.0);
    return std::conj(lead) / m;
}

Eigen2 eigen_hermitian2(const Mat2& m) {
    const double p = m(0, 0).real();
    const double r = m(1, 1).real();
    const cplx q = m(1, 0); // lower-left; upper-right is conj(q)

    Eigen2 out;
    if (q == cplx(0.0, 0.0)) {
        // Already diagonal. Identity (or a plain swap) keeps canonical
        // forms of diagonal inputs exact.
        if (p >= r) {
            out.values = {p, r};
            out.vectors = Mat2::identity();
        } else {
            out.values = {r, p};
            out.vectors = make_sigma(1);
        }
        return out;
    }

    const double mid = 0.5 * (p + r);
    const double half = 0.5 * (p - r);
    const double s = std::hypot(half, std::abs(q));
    const double lo = mid - s;
    const double hi = mid + s;

    // (hi - r, q) solves (M - hi I) v = 0; its mate is the orthogonal
    // complement. Use whichever formula has the larger leading entry.
    cplx v0, v1;
    if (std::abs(hi - r) >= std::abs(hi - p)) {
        v0 = cplx(hi - r, 0.0);
        v1 = q;
    } else {
        v0 = std::conj(q);
        v1 = cplx(hi - p, 0.0);
    }
    const double n = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= n;
    v1 /= n;

    cplx w0 = -std::conj(v1);
    cplx w1 = std::conj(v0);

    const cplx ph_v = fix_phase(std::abs(v0) > kPhaseTol ? v0 : v1);
    const cplx ph_w = fix_phase(std::abs(w0) > kPhaseTol ? w0 : w1);

    out.values = {hi, lo};
    out.vectors(0, 0) = v0 * ph_v;
    out.vectors(1, 0) = v1 * ph_v;
    out.vectors(0, 1) = w0 * ph_w;
    out.vectors(1, 1) = w1 * ph_w;
    return out;
}

} // namespace

const Mat2& pauli_sigma(int k) {
    static const Mat2 sigmas[4] = {make_sigma(0), make_sigma(1), make_sigma(2), make_sigma(3)};
    if (k < 0 || k > 3) throw internal_error("pauli_sigma: index out of range");
    return sigmas[k];
}

Mat2 require_hermitian(const Mat2& m, const std::string& name) {
    for (int i = 0; i < 4; ++i) {
        if (!is_finite(m.e[i]))
            throw validation_error(name + ": non-finite entry (" + std::to_string(i / 2 + 1) +
                                   "," + std::to_string(i % 2 + 1) + ")");
    }
    if (std::abs(m(0, 0).imag()) > kHermitianTol)
        throw validation_error(name + ": entry (1,1) must be real, imaginary part is " +
                               std::to_string(m(0, 0).imag()));
    if (std::abs(m(1, 1).imag()) > kHermitianTol)
        throw validation_error(name + ": entry (2,2) must be real, imaginary part is " +
                               std::to_string(m(1, 1).imag()));
    if (std::abs(m(0, 1) - std::conj(m(1, 0))) > kHermitianTol)
        throw validation_error(name + ": entry (1,2) must equal conj of entry (2,1), |diff| = " +
                               std::to_string(std::abs(m(0, 1) - std::conj(m(1, 0)))));

    // Symmetrize to absorb round-off that passed validation.
    Mat2 s;
    const Mat2 adj = m.adjoint();
    for (int i = 0; i < 4; ++i) s.e[i] = 0.5 * (m.e[i] + adj.e[i]);
    return s;
}

HermitianTriple make_triple(const Mat2& a1, const Mat2& a2, const Mat2& a3) {
    return HermitianTriple{require_hermitian(a1, "A1"), require_hermitian(a2, "A2"),
                           require_hermitian(a3, "A3")};
}

PauliCoeffs pauli_decompose(const Mat2& m, const std::string& name) {
    const Mat2 h = require_hermitian(m, name);
    PauliCoeffs c;
    c.a0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
    c.a3 = 0.5 * (h(0, 0).real() - h(1, 1).real());
    c.a1 = h(1, 0).real();
    c.a2 = h(1, 0).imag();
    return c;
}

PauliCoeffs pauli_decompose(const Mat2& m) { return pauli_decompose(m, "matrix"); }

Mat2 pauli_compose(const PauliCoeffs& c) {
    Mat2 m;
    m(0, 0) = cplx(c.a0 + c.a3, 0.0);
    m(1, 1) = cplx(c.a0 - c.a3, 0.0);
    m(0, 1) = cplx(c.a1, -c.a2);
    m(1, 0) = cplx(c.a1, c.a2);
    return m;
}

CanonicalParams canonicalize(const HermitianTriple& t) {
    CanonicalParams p;
    p.center = Vec3{0.5 * t.a1.trace().real(), 0.5 * t.a2.trace().real(),
                    0.5 * t.a3.trace().real()};

    const Eigen2 eig = eigen_hermitian2(t.a1);
    p.conjugator = eig.vectors;

    const Mat2 uadj = p.conjugator.adjoint();
    const Mat2 b2 = uadj * t.a2 * p.conjugator;
    const Mat2 b3 = uadj * t.a3 * p.conjugator;

    // A1 in the new basis is diag(values); only its sigma3 part survives
    // the centering.
    p.a.x = 0.5 * (eig.values[0] - eig.values[1]);

    const PauliCoeffs c2 = pauli_decompose(b2, "A2 (conjugated)");
    const PauliCoeffs c3 = pauli_decompose(b3, "A3 (conjugated)");
    p.a.y = c2.a3;
    p.a.z = c3.a3;
    p.alpha2 = cplx(c2.a2, c2.a1);
    p.alpha3 = cplx(c3.a1, c3.a2);
    return p;
}

HermitianTriple canonical_triple(const CanonicalParams& p) {
    PauliCoeffs c1{p.center.x, 0.0, 0.0, p.a.x};
    PauliCoeffs c2{p.center.y, p.alpha2.imag(), p.alpha2.real(), p.a.y};
    PauliCoeffs c3{p.center.z, p.alpha3.real(), p.alpha3.imag(), p.a.z};
    return HermitianTriple{pauli_compose(c1), pauli_compose(c2), pauli_compose(c3)};
}

HermitianTriple reconstruct(const CanonicalParams& p) {
    const HermitianTriple b = canonical_triple(p);
    const Mat2& u = p.conjugator;
    const Mat2 uadj = u.adjoint();
    return HermitianTriple{u * b.a1 * uadj, u * b.a2 * uadj, u * b.a3 * uadj};
}

} // namespace cliffspec
