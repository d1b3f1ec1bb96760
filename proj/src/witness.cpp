#include "cliffspec/witness.hpp"

#include "cliffspec/localizer.hpp"

#include <cmath>
#include <string>

namespace cliffspec {

namespace {

Vec3 ray_direction(const QuarticInvariants& inv) {
    if (inv.x0.norm() > 0.5) return inv.x0;
    return Vec3{1.0, 0.0, 0.0};
}

} // namespace

const char* witness_branch_name(WitnessBranch b) {
    return b == WitnessBranch::NonpositiveC ? "NonpositiveC" : "EigenvectorScaled";
}

Vec3 refine_spectrum_point(const QuarticInvariants& inv, const WitnessResult& start) {
    const double scale = witness_scale(inv);
    const double tol_root = 1e-12 * scale;
    const double tol_accept = 1e-10 * scale;

    const Vec3 w = start.witness - inv.center;
    const double dw = D_at_offset(inv, w);
    if (std::abs(dw) <= tol_root) return start.witness;

    const Vec3 u = ray_direction(inv);
    auto eval = [&](double t) { return D_at_offset(inv, w + t * u); };

    // Push the far end out until the quartic growth dominates.
    double radius = 1.0;
    int doublings = 0;
    while (eval(radius) <= 0.0) {
        if (++doublings > 60)
            throw internal_error("refine_spectrum_point: D stayed nonpositive out to radius " +
                                 std::to_string(radius));
        radius *= 2.0;
    }

    if (dw < 0.0) {
        double lo = 0.0, hi = radius;
        double best_t = 0.0, best_d = std::abs(dw);
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const double dm = eval(mid);
            if (std::abs(dm) < best_d) {
                best_d = std::abs(dm);
                best_t = mid;
            }
            if (std::abs(dm) <= tol_root) return start.witness + mid * u;
            (dm < 0.0 ? lo : hi) = mid;
            if (hi - lo <= 1e-17 * radius) break;
        }
        return start.witness + best_t * u;
    }

    // No sign change on [witness, far end]: D has an isolated minimum near
    // zero. Golden-section minimize along the ray.
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = 0.0, b = radius;
    double t1 = b - gr * (b - a), t2 = a + gr * (b - a);
    double f1 = eval(t1), f2 = eval(t2);
    for (int iter = 0; iter < 300 && (b - a) > 1e-15 * radius; ++iter) {
        if (f1 <= f2) {
            b = t2;
            t2 = t1;
            f2 = f1;
            t1 = b - gr * (b - a);
            f1 = eval(t1);
        } else {
            a = t1;
            t1 = t2;
            f1 = f2;
            t2 = a + gr * (b - a);
            f2 = eval(t2);
        }
    }
    const double tbest = f1 <= f2 ? t1 : t2;
    const double dbest = std::min(f1, f2);
    if (std::abs(dbest) > tol_accept)
        throw internal_error("refine_spectrum_point: no root along the witness ray, |D| = " +
                             std::to_string(std::abs(dbest)));
    return start.witness + tbest * u;
}

WitnessResult witness_point(const QuarticInvariants& inv, const Vec3& center,
                            const Mat2& conjugator) {
    if ((center - inv.center).norm() != 0.0)
        throw internal_error("witness_point: center argument disagrees with the invariants");

    const double scale = witness_scale(inv);

    WitnessResult r;
    if (inv.c <= 0.0) {
        r.branch = WitnessBranch::NonpositiveC;
        r.witness = center;
    } else {
        r.branch = WitnessBranch::EigenvectorScaled;
        double radicand = 2.0 * inv.lambda0 - inv.beta;
        if (radicand < -1e-9 * (1.0 + inv.beta))
            throw internal_error("witness_point: 2 lambda0 - beta = " + std::to_string(radicand) +
                                 " is negative; lambda0 >= beta/2 should always hold");
        if (radicand < 0.0) radicand = 0.0;
        r.witness = center + std::sqrt(radicand) * inv.x0;
    }

    r.d_value = D_at_offset(inv, r.witness - center);
    if (r.d_value > 1e-9 * scale)
        throw internal_error("witness_point: D at the witness is " + std::to_string(r.d_value) +
                             ", above tolerance " + std::to_string(1e-9 * scale));

    r.spectrum_point = refine_spectrum_point(inv, r);

    CanonicalParams p;
    p.center = center;
    p.a = inv.a;
    p.alpha2 = inv.alpha2;
    p.alpha3 = inv.alpha3;
    p.conjugator = conjugator;
    r.gap_at_point = localizer_gap(reconstruct(p), r.spectrum_point);
    return r;
}

} // namespace cliffspec
