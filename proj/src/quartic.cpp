#include "cliffspec/quartic.hpp"

#include <cmath>
#include <string>

namespace cliffspec {

QuarticInvariants invariants(const CanonicalParams& p) {
    QuarticInvariants inv;
    inv.center = p.center;
    inv.a = p.a;
    inv.alpha2 = p.alpha2;
    inv.alpha3 = p.alpha3;

    const double a13 = p.a.x, a23 = p.a.y, a33 = p.a.z;
    const double m2 = std::norm(p.alpha2);
    const double m3 = std::norm(p.alpha3);
    const cplx prod = p.alpha2 * p.alpha3;
    const double im = prod.imag();
    const double re = prod.real();
    const double kappa = std::norm(p.alpha2 * p.alpha2 - std::conj(p.alpha3) * std::conj(p.alpha3));

    inv.norm_a_sq = a13 * a13 + a23 * a23 + a33 * a33;
    inv.alpha_sq = m2 + m3;
    inv.beta = inv.norm_a_sq + inv.alpha_sq;
    inv.delta = std::abs(p.alpha2 * a23 + cplx(0.0, 1.0) * std::conj(p.alpha3) * a33);
    inv.c = inv.norm_a_sq * inv.norm_a_sq - 2.0 * inv.alpha_sq * inv.norm_a_sq +
            4.0 * inv.delta * inv.delta + kappa;
    inv.d = inv.norm_a_sq * inv.alpha_sq - inv.delta * inv.delta + re * re;
    inv.e = 2.0 * m2 * (a13 * a13 - a23 * a23 + a33 * a33) +
            2.0 * m3 * (a13 * a13 + a23 * a23 - a33 * a33) - 8.0 * im * (a23 * a33) - kappa;
    inv.f = std::sqrt((m2 - m3) * (m2 - m3) + 4.0 * im * im);

    // c and e are computed from independent expressions that must satisfy
    // c = ||a||^4 - e; disagreement means a transcription bug.
    const double a4 = inv.norm_a_sq * inv.norm_a_sq;
    if (std::abs((a4 - inv.e) - inv.c) > 1e-9 * (1.0 + std::abs(inv.c) + a4))
        throw internal_error("invariants: c = ||a||^4 - e cross-check failed, c = " +
                             std::to_string(inv.c) + ", ||a||^4 - e = " +
                             std::to_string(a4 - inv.e));

    inv.coupling = {{{a13 * a13, a13 * a23, a13 * a33},
                     {a13 * a23, a23 * a23 + m2, a23 * a33 + im},
                     {a13 * a33, a23 * a33 + im, a33 * a33 + m3}}};

    const Sym3Eigen eig = jacobi_sym3(inv.coupling);
    inv.lambda0 = eig.values[2];
    inv.x0 = Vec3{eig.vectors[0][2], eig.vectors[1][2], eig.vectors[2][2]};
    return inv;
}

double D_full(const CanonicalParams& p, const Vec3& x) {
    const double y1 = p.center.x - x.x;
    const double y2 = p.center.y - x.y;
    const double y3 = p.center.z - x.z;
    const double a13 = p.a.x, a23 = p.a.y, a33 = p.a.z;

    const double m2 = std::norm(p.alpha2);
    const double m3 = std::norm(p.alpha3);
    const double im = (p.alpha2 * p.alpha3).imag();
    const double kappa = std::norm(p.alpha2 * p.alpha2 - std::conj(p.alpha3) * std::conj(p.alpha3));

    // Grouped exactly as the closed form is stated: products of sums, no
    // expansion into monomials.
    const double sm = (y1 - a13) * (y1 - a13) + (y2 - a23) * (y2 - a23) + (y3 - a33) * (y3 - a33);
    const double sp = (y1 + a13) * (y1 + a13) + (y2 + a23) * (y2 + a23) + (y3 + a33) * (y3 + a33);

    const double q1 = y1 * y1 - a13 * a13;
    const double q2 = y2 * y2 - a23 * a23;
    const double q3 = y3 * y3 - a33 * a33;

    const double t2 = 2.0 * m2 * (q1 - q2 + q3);
    const double t3 = 2.0 * m3 * (q1 + q2 - q3);
    const double ti = -4.0 * im * ((y2 + a23) * (y3 - a33) + (y2 - a23) * (y3 + a33));

    return sm * sp + t2 + t3 + ti + kappa;
}

double D_at_offset(const QuarticInvariants& inv, const Vec3& p) {
    return field_eval_point(field_coeffs(inv), p.x, p.y, p.z);
}

double D_reduced(const QuarticInvariants& inv, const Vec3& x) {
    if (inv.center.x != 0.0 || inv.center.y != 0.0 || inv.center.z != 0.0)
        throw internal_error("D_reduced: invariants carry a nonzero trace center; "
                             "center the parameters first");
    return D_at_offset(inv, x);
}

Vec3 symmetry_center(const CanonicalParams& p) { return p.center; }

QuarticFieldCoeffs field_coeffs(const QuarticInvariants& inv) {
    QuarticFieldCoeffs k;
    k.two_beta = 2.0 * inv.beta;
    k.c = inv.c;
    k.a00 = inv.coupling[0][0];
    k.a01 = inv.coupling[0][1];
    k.a02 = inv.coupling[0][2];
    k.a11 = inv.coupling[1][1];
    k.a12 = inv.coupling[1][2];
    k.a22 = inv.coupling[2][2];
    return k;
}

} // namespace cliffspec
