#include "cliffspec/rng.hpp"

namespace cliffspec {

CanonicalParams random_params(SplitMix64& rng, bool with_center) {
    CanonicalParams p;
    p.a.x = rng.uniform(-5.0, 5.0);
    p.a.y = rng.uniform(-5.0, 5.0);
    p.a.z = rng.uniform(-5.0, 5.0);
    p.alpha2 = cplx(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
    p.alpha3 = cplx(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
    if (with_center) {
        p.center.x = rng.uniform(-5.0, 5.0);
        p.center.y = rng.uniform(-5.0, 5.0);
        p.center.z = rng.uniform(-5.0, 5.0);
    }
    p.conjugator = Mat2::identity();
    return p;
}

HermitianTriple random_triple(SplitMix64& rng) {
    auto matrix = [&rng]() {
        Mat2 m;
        m(0, 0) = cplx(rng.uniform(-5.0, 5.0), 0.0);
        m(1, 1) = cplx(rng.uniform(-5.0, 5.0), 0.0);
        const cplx off(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
        m(1, 0) = off;
        m(0, 1) = std::conj(off);
        return m;
    };
    const Mat2 a1 = matrix(), a2 = matrix(), a3 = matrix();
    return make_triple(a1, a2, a3);
}

Vec3 random_point(SplitMix64& rng, double lo, double hi) {
    return Vec3{rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

Mat2 random_unitary(SplitMix64& rng) {
    Mat2 h;
    h(0, 0) = cplx(rng.uniform(-1.0, 1.0), 0.0);
    h(1, 1) = cplx(rng.uniform(-1.0, 1.0), 0.0);
    const cplx off(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    h(1, 0) = off;
    h(0, 1) = std::conj(off);
    const HermitianTriple t{h, Mat2::zero(), Mat2::zero()};
    return canonicalize(t).conjugator;
}

} // namespace cliffspec
