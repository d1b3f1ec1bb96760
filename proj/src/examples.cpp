#include "cliffspec/examples.hpp"

#include <algorithm>
#include <cmath>

namespace cliffspec {

namespace {

// Triple in canonical position: A1 = a13 s3, A2/A3 from (a, alpha2, alpha3).
HermitianTriple canonical_example(double a13, double a23, double a33, cplx alpha2, cplx alpha3) {
    CanonicalParams p;
    p.center = Vec3{0.0, 0.0, 0.0};
    p.a = Vec3{a13, a23, a33};
    p.alpha2 = alpha2;
    p.alpha3 = alpha3;
    p.conjugator = Mat2::identity();
    return reconstruct(p);
}

HermitianTriple lemniscate_triple() {
    return HermitianTriple{pauli_sigma(1) * cplx(0.5, 0.0), pauli_sigma(2),
                           pauli_sigma(3) * cplx(0.5, 0.0)};
}

} // namespace

const std::vector<std::string>& builtin_example_ids() {
    static const std::vector<std::string> ids = {"ex4.1", "ex4.2", "ex4.3",
                                                 "ex4.4", "ex4.5", "lemniscate"};
    return ids;
}

bool is_builtin_example(const std::string& id) {
    const auto& ids = builtin_example_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

HermitianTriple builtin_example(const std::string& id) {
    if (id == "ex4.1") return canonical_example(2.0, 1.0, 2.0, {1.0, -3.0}, {2.0, 1.0});
    if (id == "ex4.2")
        return canonical_example(std::sqrt(10.0), 2.0, -2.0, {2.0, -1.0}, {3.0, 2.0});
    if (id == "ex4.3") return canonical_example(6.0, 1.0, -1.0, {2.0, -1.0}, {3.0, 2.0});
    if (id == "ex4.4") return canonical_example(1.0, 1.0, 0.0, {0.0, 0.0}, {1.0, 1.0});
    if (id == "ex4.5") return canonical_example(1.0, 1.0, 0.0, {0.0, 0.0}, {0.0, 1.0});
    if (id == "lemniscate") return lemniscate_triple();
    throw validation_error("unknown example id '" + id +
                           "' (expected ex4.1 .. ex4.5 or lemniscate)");
}

} // namespace cliffspec
