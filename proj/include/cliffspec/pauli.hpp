#pragma once

#include "cliffspec/types.hpp"

namespace cliffspec {

/// Coefficients of a Hermitian 2x2 matrix in the basis
/// sigma0 = I, sigma1 = [[0,1],[1,0]], sigma2 = [[0,-i],[i,0]], sigma3 = [[1,0],[0,-1]].
struct PauliCoeffs {
    double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
};

/// Three validated Hermitian 2x2 matrices. Construct through make_triple()
/// so the Hermitian invariant holds on every member.
struct HermitianTriple {
    Mat2 a1, a2, a3;
};

/// A triple brought to canonical form: the conjugating unitary U renders
/// U* A1 U diagonal, the trace centers are split off, and the rest of the
/// data is the vector a = (a13, a23, a33) plus the two complex numbers
/// alpha2 = a22 + i a21 and alpha3 = a31 + i a32.
///
/// Conventions making the form reproducible: eigenvalues of A1 are sorted
/// so a13 >= 0, and each eigenvector's first component above 1e-12 in
/// magnitude is made real and positive.
struct CanonicalParams {
    Vec3 center;     // (tr A1 / 2, tr A2 / 2, tr A3 / 2)
    Vec3 a;          // (a13, a23, a33), a13 >= 0
    cplx alpha2;     // a22 + i a21
    cplx alpha3;     // a31 + i a32
    Mat2 conjugator; // unitary U with U* A1 U diagonal

    /// Same instance with the trace centers dropped.
    CanonicalParams centered() const {
        CanonicalParams p = *this;
        p.center = Vec3{0.0, 0.0, 0.0};
        return p;
    }
};

const Mat2& pauli_sigma(int k); // k in 0..3

/// Validates the Hermitian invariant to 1e-12 (absolute) and returns the
/// exactly symmetrized matrix (M + M*)/2. `name` labels error messages.
Mat2 require_hermitian(const Mat2& m, const std::string& name);

HermitianTriple make_triple(const Mat2& a1, const Mat2& a2, const Mat2& a3);

PauliCoeffs pauli_decompose(const Mat2& m);
PauliCoeffs pauli_decompose(const Mat2& m, const std::string& name);
Mat2 pauli_compose(const PauliCoeffs& c);

CanonicalParams canonicalize(const HermitianTriple& t);

/// Inverse of canonicalize: rebuilds the three matrices from the
/// parameters and conjugates back with U.
HermitianTriple reconstruct(const CanonicalParams& p);

/// The three matrices in canonical position (A1 diagonal, centers kept).
HermitianTriple canonical_triple(const CanonicalParams& p);

} // namespace cliffspec
