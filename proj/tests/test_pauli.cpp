#include "cliffspec/examples.hpp"
#include "cliffspec/pauli.hpp"
#include "cliffspec/rng.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cliffspec;
using namespace cliffspec::testing;

namespace {

Mat2 hermitian(double m11, double m22, cplx m21) {
    Mat2 m;
    m(0, 0) = m11;
    m(1, 1) = m22;
    m(1, 0) = m21;
    m(0, 1) = std::conj(m21);
    return m;
}

} // namespace

TEST_CASE("decompose basis elements") {
    const PauliCoeffs s3 = pauli_decompose(pauli_sigma(3));
    CHECK(s3.a0 == 0.0);
    CHECK(s3.a1 == 0.0);
    CHECK(s3.a2 == 0.0);
    CHECK(s3.a3 == 1.0);

    const PauliCoeffs id = pauli_decompose(Mat2::identity());
    CHECK(id.a0 == 1.0);
    CHECK(id.a3 == 0.0);
}

TEST_CASE("decompose a generic matrix") {
    // M11 = 2, M22 = 0, M21 = 1 - 3i; expanding a0 s0 + .. + a3 s3 entrywise
    // gives (1, 1, -3, 1).
    const PauliCoeffs c = pauli_decompose(hermitian(2.0, 0.0, {1.0, -3.0}));
    CHECK(c.a0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.a1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.a2 == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(c.a3 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("compose basics") {
    CHECK(pauli_compose({0, 0, 0, 0}).max_abs_diff(Mat2::zero()) == 0.0);
    CHECK(pauli_compose({0, 1, 0, 0}).max_abs_diff(pauli_sigma(1)) == 0.0);

    const Mat2 m = pauli_compose({1, 1, -3, 1});
    CHECK(m(0, 0) == cplx(2.0, 0.0));
    CHECK(m(1, 1) == cplx(0.0, 0.0));
    CHECK(m(0, 1) == cplx(1.0, 3.0));
    CHECK(m(1, 0) == cplx(1.0, -3.0));
}

TEST_CASE("compose/decompose round trip") {
    SplitMix64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Mat2 m = hermitian(rng.uniform(-5, 5), rng.uniform(-5, 5),
                                 {rng.uniform(-5, 5), rng.uniform(-5, 5)});
        CHECK(pauli_compose(pauli_decompose(m)).max_abs_diff(m) <= 1e-12);

        const PauliCoeffs c{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5),
                            rng.uniform(-5, 5)};
        const PauliCoeffs back = pauli_decompose(pauli_compose(c));
        CHECK(std::abs(back.a0 - c.a0) <= 1e-14);
        CHECK(std::abs(back.a1 - c.a1) <= 1e-14);
        CHECK(std::abs(back.a2 - c.a2) <= 1e-14);
        CHECK(std::abs(back.a3 - c.a3) <= 1e-14);
    }
}

TEST_CASE("non-Hermitian input is rejected with the violated entry named") {
    Mat2 bad_diag = hermitian(1.0, 2.0, {0.5, 0.5});
    bad_diag(0, 0) = cplx(1.0, 1e-3);
    CHECK_THROWS_WITH_AS(pauli_decompose(bad_diag, "A1"),
                         doctest::Contains("(1,1)"), validation_error);

    Mat2 bad_off = hermitian(1.0, 2.0, {0.5, 0.5});
    bad_off(0, 1) = cplx(0.5, 0.5); // should be conj of (1,0)
    CHECK_THROWS_WITH_AS(pauli_decompose(bad_off, "A2"),
                         doctest::Contains("(1,2)"), validation_error);

    Mat2 nan_entry = hermitian(1.0, 2.0, {0.5, 0.5});
    nan_entry(1, 1) = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(pauli_decompose(nan_entry, "A3"), validation_error);
}

TEST_CASE("tiny asymmetry inside tolerance is symmetrized away") {
    Mat2 m = hermitian(1.0, -1.0, {2.0, 1.0});
    m(0, 1) += cplx(5e-13, -5e-13);
    const Mat2 fixed = require_hermitian(m, "A1");
    CHECK(fixed.max_abs_diff(fixed.adjoint()) == 0.0);
}

TEST_CASE("canonicalize an already diagonal triple") {
    const HermitianTriple t{pauli_sigma(3), pauli_sigma(3), pauli_sigma(3)};
    const CanonicalParams p = canonicalize(t);
    CHECK(p.center.norm() == 0.0);
    CHECK(p.a.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.a.y == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.a.z == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(p.alpha2) == 0.0);
    CHECK(std::abs(p.alpha3) == 0.0);
    CHECK(p.conjugator.max_abs_diff(Mat2::identity()) == 0.0);
}

TEST_CASE("canonicalize (sigma1, 0, 0) with a Hadamard-type unitary") {
    const HermitianTriple t{pauli_sigma(1), Mat2::zero(), Mat2::zero()};
    const CanonicalParams p = canonicalize(t);
    CHECK(p.a.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(p.a.y) <= 1e-14);
    CHECK(std::abs(p.a.z) <= 1e-14);
    CHECK(std::abs(p.alpha2) <= 1e-14);
    CHECK(std::abs(p.alpha3) <= 1e-14);

    const double r = 1.0 / std::sqrt(2.0);
    Mat2 hadamard;
    hadamard(0, 0) = r;
    hadamard(0, 1) = r;
    hadamard(1, 0) = r;
    hadamard(1, 1) = -r;
    CHECK(p.conjugator.max_abs_diff(hadamard) <= 1e-15);
}

TEST_CASE("canonical parameters of the first worked example round trip") {
    const CanonicalParams p = canonicalize(builtin_example("ex4.1"));
    CHECK(p.center.norm() <= 1e-14);
    CHECK(p.a.x == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(p.a.y == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p.a.z == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(p.alpha2 - cplx(1.0, -3.0)) <= 1e-13);
    CHECK(std::abs(p.alpha3 - cplx(2.0, 1.0)) <= 1e-13);
}

TEST_CASE("random triples: reconstruct(canonicalize(t)) == t") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const HermitianTriple t = random_triple(rng);
        const CanonicalParams p = canonicalize(t);

        CHECK(p.a.x >= 0.0);

        const Mat2 uu = p.conjugator * p.conjugator.adjoint();
        CHECK(uu.max_abs_diff(Mat2::identity()) <= 1e-12);

        CHECK(max_entry_diff(reconstruct(p), t) <= 1e-10);
    }
}

TEST_CASE("canonicalize is idempotent on canonical triples") {
    SplitMix64 rng(77);
    for (int i = 0; i < 300; ++i) {
        CanonicalParams p = random_params(rng, false);
        p.a.x = std::abs(p.a.x); // canonical ordering has a13 >= 0
        const HermitianTriple t = canonical_triple(p);

        const CanonicalParams q = canonicalize(t);
        CHECK(q.conjugator.max_abs_diff(Mat2::identity()) == 0.0);
        CHECK(std::abs(q.a.x - p.a.x) <= 1e-14);
        CHECK(std::abs(q.a.y - p.a.y) <= 1e-14);
        CHECK(std::abs(q.a.z - p.a.z) <= 1e-14);
        CHECK(std::abs(q.alpha2 - p.alpha2) <= 1e-14);
        CHECK(std::abs(q.alpha3 - p.alpha3) <= 1e-14);
    }
}

TEST_CASE("scalar A1 gets the identity conjugator") {
    const Mat2 two_id = Mat2::identity() * cplx(2.0, 0.0);
    const HermitianTriple t{two_id, pauli_sigma(1), pauli_sigma(2)};
    const CanonicalParams p = canonicalize(t);
    CHECK(p.conjugator.max_abs_diff(Mat2::identity()) == 0.0);
    CHECK(p.center.x == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(p.a.x == 0.0);
    // B2 = sigma1 so alpha2 = i, B3 = sigma2 so alpha3 = i
    CHECK(std::abs(p.alpha2 - cplx(0.0, 1.0)) <= 1e-14);
    CHECK(std::abs(p.alpha3 - cplx(0.0, 1.0)) <= 1e-14);
}
