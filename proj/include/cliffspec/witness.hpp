#pragma once

#include "cliffspec/quartic.hpp"

namespace cliffspec {

enum class WitnessBranch {
    NonpositiveC,      // c <= 0, the symmetry center already has D <= 0
    EigenvectorScaled, // x* = center + sqrt(2 lambda0 - beta) x0
};

const char* witness_branch_name(WitnessBranch b);

/// Certificate that the Clifford spectrum is nonempty: a point with
/// D <= 0 and the refined root obtained from it. Coordinates are in the
/// original (unconjugated, uncentered) frame.
struct WitnessResult {
    Vec3 witness;
    double d_value = 0.0;
    WitnessBranch branch = WitnessBranch::NonpositiveC;
    Vec3 spectrum_point;
    double gap_at_point = 0.0;
};

/// Tolerance scale for witness checks; D is quartic in the data, so
/// everything is measured against (1 + beta)^2.
inline double witness_scale(const QuarticInvariants& inv) {
    return (1.0 + inv.beta) * (1.0 + inv.beta);
}

/// Builds the non-emptiness witness and refines it to a root of D. `inv`
/// must come from trace-centered parameters; `center` and `conjugator`
/// place the result back in the original frame (the unitary moves nothing,
/// only the center shift applies; the conjugator is used to evaluate the
/// localizer gap on the reconstructed original triple).
WitnessResult witness_point(const QuarticInvariants& inv, const Vec3& center,
                            const Mat2& conjugator);

/// Root of D on the ray from the witness through witness + R x0, located
/// by bisection once D > 0 at the far end (R doubles from 1). When D never
/// changes sign (isolated zeros), falls back to golden-section
/// minimization along the ray and accepts a minimizer with
/// |D| <= 1e-10 * scale.
Vec3 refine_spectrum_point(const QuarticInvariants& inv, const WitnessResult& start);

} // namespace cliffspec
