#pragma once

#include "cliffspec/pauli.hpp"
#include "cliffspec/types.hpp"

#include <cstdint>

namespace cliffspec {

/// SplitMix64 (Steele, Lea & Vigna, "Fast splittable pseudorandom number
/// generators", 2014). 64-bit state advanced by the golden-gamma Weyl
/// constant and finalized with the murmur-style mix:
///
///   state += 0x9e3779b97f4a7c15
///   z = state
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
///
/// Splitting seeds a child generator with the parent's next output, so
/// per-instance streams are reproducible in any implementation of the
/// same algorithm.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    SplitMix64 split() { return SplitMix64(next()); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

/// Canonical parameters with every coefficient uniform in [-5, 5], drawn
/// in the order a13, a23, a33, Re a2, Im a2, Re a3, Im a3[, c1, c2, c3].
/// The conjugator is the identity.
CanonicalParams random_params(SplitMix64& rng, bool with_center);

/// Hermitian triple with entries uniform in [-5, 5]: per matrix the two
/// real diagonal entries, then Re and Im of the (2,1) entry.
HermitianTriple random_triple(SplitMix64& rng);

Vec3 random_point(SplitMix64& rng, double lo, double hi);

/// Haar-ish random unitary: eigenvector matrix of a random Hermitian 2x2.
Mat2 random_unitary(SplitMix64& rng);

} // namespace cliffspec
