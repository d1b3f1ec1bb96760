#pragma once

#include "cliffspec/pauli.hpp"
#include "cliffspec/quartic.hpp"
#include "cliffspec/rng.hpp"

#include <cmath>
#include <utility>

namespace cliffspec::testing {

/// |a - b| <= tol * (1 + max(|a|, |b|))
inline bool close_mixed(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

/// Per-instance child streams, same scheme the oracle-check command uses:
/// a parent SplitMix64 seeds one child per instance.
template <typename Fn>
void for_each_instance(std::uint64_t seed, int count, bool with_center, Fn&& fn) {
    SplitMix64 parent(seed);
    for (int i = 0; i < count; ++i) {
        SplitMix64 gen = parent.split();
        CanonicalParams params = random_params(gen, with_center);
        fn(params, gen);
    }
}

/// Direct 3x3 determinant, the independent check for the coupling matrix.
inline double det3(const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline double max_entry_diff(const HermitianTriple& a, const HermitianTriple& b) {
    return std::max({a.a1.max_abs_diff(b.a1), a.a2.max_abs_diff(b.a2), a.a3.max_abs_diff(b.a3)});
}

} // namespace cliffspec::testing
