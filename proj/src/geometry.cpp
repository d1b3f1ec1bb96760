#include "cliffspec/geometry.hpp"

#include <cmath>

namespace cliffspec {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_centered(const CanonicalParams& p, const char* who) {
    if (p.center.x != 0.0 || p.center.y != 0.0 || p.center.z != 0.0)
        throw internal_error(std::string(who) + ": parameters must be trace-centered");
}

// Branch decisions scale with the data; beta is the natural magnitude.
double zero_tol(const QuarticInvariants& inv) { return 1e-12 * (1.0 + inv.beta); }

} // namespace

const char* spectrum_kind_name(SpectrumKind k) {
    switch (k) {
    case SpectrumKind::TwoFociPoints: return "TwoFociPoints";
    case SpectrumKind::SingleFocusPoint: return "SingleFocusPoint";
    case SpectrumKind::DegenerateDiagonalFamily: return "DegenerateDiagonalFamily";
    default: return "CassiniHyperboloid";
    }
}

const char* e_situation_name(ESituation s) {
    switch (s) {
    case ESituation::EPositive: return "EPositive";
    case ESituation::EZero: return "EZero";
    default: return "ENegative";
    }
}

const char* components_hint_name(ComponentsHint h) {
    switch (h) {
    case ComponentsHint::Connected: return "Connected";
    case ComponentsHint::TwoComponents: return "TwoComponents";
    default: return "Unknown";
    }
}

const char* cassini_level_name(CassiniLevel l) {
    switch (l) {
    case CassiniLevel::FociOnly: return "FociOnly";
    case CassiniLevel::TwoLoops: return "TwoLoops";
    case CassiniLevel::Lemniscate: return "Lemniscate";
    case CassiniLevel::OneLoop: return "OneLoop";
    case CassiniLevel::SphereLike: return "SphereLike";
    default: return "Point";
    }
}

std::array<std::array<double, 3>, 3> H_quadratic(const QuarticInvariants& inv) {
    const double m2 = std::norm(inv.alpha2);
    const double m3 = std::norm(inv.alpha3);
    const double im = (inv.alpha2 * inv.alpha3).imag();
    return {{{-2.0 * (m2 + m3), 0.0, 0.0},
             {0.0, 2.0 * (m2 - m3), 4.0 * im},
             {0.0, 4.0 * im, 2.0 * (m3 - m2)}}};
}

double H_eval(const QuarticInvariants& inv, const CanonicalParams& p, const Vec3& x) {
    require_centered(p, "H_eval");
    const auto q = H_quadratic(inv);
    double s = inv.e;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += q[i][j] * x[i] * x[j];
    return s;
}

RotatedFrame rotated_frame(const QuarticInvariants& inv) {
    if (inv.f <= zero_tol(inv))
        throw internal_error("rotated_frame: requires f > 0, the cross term is already absent");

    const double m2 = std::norm(inv.alpha2);
    const double m3 = std::norm(inv.alpha3);
    const double im = (inv.alpha2 * inv.alpha3).imag();

    // theta0 in [0, 2pi) with cos theta0 = (|a2|^2 - |a3|^2)/f and
    // sin theta0 = 2 Im(a2 a3)/f; the frame angle is -theta0/2.
    double theta0 = std::atan2(2.0 * im / inv.f, (m2 - m3) / inv.f);
    if (theta0 < 0.0) theta0 += 2.0 * kPi;

    RotatedFrame frame;
    frame.theta = -0.5 * theta0;
    const double ct = std::cos(frame.theta);
    const double st = std::sin(frame.theta);
    // x1 = y1, x2 = cos(t) y2 + sin(t) y3, x3 = -sin(t) y2 + cos(t) y3
    frame.rotation = {{{1.0, 0.0, 0.0}, {0.0, ct, st}, {0.0, -st, ct}}};
    return frame;
}

SpectrumClassification classify(const QuarticInvariants& inv, const CanonicalParams& p) {
    require_centered(p, "classify");

    const double tol = zero_tol(inv);

    SpectrumClassification out;
    out.focus_plus = inv.a;
    out.focus_minus = -inv.a;
    out.f_value = inv.f;
    out.e_value = inv.e;

    const double e_tol = 1e-12 * (1.0 + inv.norm_a_sq * inv.norm_a_sq);
    if (inv.e > e_tol)
        out.situation = ESituation::EPositive;
    else if (inv.e < -e_tol)
        out.situation = ESituation::ENegative;
    else
        out.situation = ESituation::EZero;

    const double t2 = std::abs(inv.alpha2);
    const double t3 = std::abs(inv.alpha3);

    if (inv.f <= tol) {
        out.theta = 0.0;
        if (t2 <= tol && t3 <= tol) {
            // All three matrices diagonal; the spectrum is the pair of foci.
            if (inv.a.norm() <= tol) {
                out.kind = SpectrumKind::SingleFocusPoint;
                out.components_hint = ComponentsHint::Connected;
            } else {
                out.kind = SpectrumKind::TwoFociPoints;
                out.components_hint = ComponentsHint::TwoComponents;
            }
        } else {
            out.kind = SpectrumKind::DegenerateDiagonalFamily;
            out.components_hint = ComponentsHint::Unknown;
        }
        return out;
    }

    out.kind = SpectrumKind::CassiniHyperboloid;
    out.theta = rotated_frame(inv).theta;
    out.components_hint =
        inv.c <= 0.0 ? ComponentsHint::Connected : ComponentsHint::TwoComponents;
    return out;
}

CassiniLevel classify_cassini_level(const QuarticInvariants& inv, double r) {
    if (r < 0.0)
        throw validation_error("classify_cassini_level: level r must be nonnegative");

    const double m = inv.a.norm(); // half focal distance
    const double tol = zero_tol(inv);

    if (m <= tol) return r <= tol * tol ? CassiniLevel::Point : CassiniLevel::SphereLike;
    if (r == 0.0) return CassiniLevel::FociOnly;

    // sqrt(r) is the squared distance product; the lemniscate sits where it
    // equals msq = ||F||^2.
    const double b = std::sqrt(r);
    const double msq = m * m;
    if (std::abs(b - msq) <= 1e-12 * std::max(b, msq)) return CassiniLevel::Lemniscate;
    return b < msq ? CassiniLevel::TwoLoops : CassiniLevel::OneLoop;
}

} // namespace cliffspec
