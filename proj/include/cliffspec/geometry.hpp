#pragma once

#include "cliffspec/quartic.hpp"

#include <array>

namespace cliffspec {

enum class SpectrumKind {
    TwoFociPoints,            // all three matrices diagonal: spectrum = {F+, F-}
    SingleFocusPoint,         // additionally a = 0: spectrum = {center}
    DegenerateDiagonalFamily, // f = 0 with |alpha2| = |alpha3| > 0
    CassiniHyperboloid,       // generic f > 0 case
};

enum class ESituation { EPositive, EZero, ENegative };

enum class ComponentsHint { Connected, TwoComponents, Unknown };

/// Phase of the level surface (d(P,F+) d(P,F-))^2 = r.
enum class CassiniLevel { FociOnly, TwoLoops, Lemniscate, OneLoop, SphereLike, Point };

const char* spectrum_kind_name(SpectrumKind k);
const char* e_situation_name(ESituation s);
const char* components_hint_name(ComponentsHint h);
const char* cassini_level_name(CassiniLevel l);

/// Geometric classification of the zero set of D, in the centered frame.
struct SpectrumClassification {
    SpectrumKind kind = SpectrumKind::CassiniHyperboloid;
    Vec3 focus_plus;  // (a13, a23, a33)
    Vec3 focus_minus; // -(a13, a23, a33)
    double f_value = 0.0;
    double e_value = 0.0;
    ESituation situation = ESituation::EZero;
    double theta = 0.0; // rotation angle in (-pi, 0]; 0 when f = 0
    ComponentsHint components_hint = ComponentsHint::Unknown;
};

/// Requires trace-centered parameters.
SpectrumClassification classify(const QuarticInvariants& inv, const CanonicalParams& p);

/// The quadratic H with D(x) = (d(P,F+) d(P,F-))^2 - H(x). Requires
/// trace-centered parameters.
double H_eval(const QuarticInvariants& inv, const CanonicalParams& p, const Vec3& x);

/// Rotation of the (x2, x3) plane that removes the y2 y3 cross term from
/// H. Valid only when f > 0. `rotation` maps frame coordinates y to
/// original coordinates x (it fixes the x1 axis).
struct RotatedFrame {
    double theta = 0.0;
    std::array<std::array<double, 3>, 3> rotation{};
};

RotatedFrame rotated_frame(const QuarticInvariants& inv);

/// Symmetric matrix of the quadratic part of H plus its constant e, so
/// H(x) = <Q x, x> + e. Exposed for frame checks.
std::array<std::array<double, 3>, 3> H_quadratic(const QuarticInvariants& inv);

CassiniLevel classify_cassini_level(const QuarticInvariants& inv, double r);

} // namespace cliffspec
