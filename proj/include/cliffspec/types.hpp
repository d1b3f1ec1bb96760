#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace cliffspec {

using cplx = std::complex<double>;

/// Thrown when user-supplied data violates a documented precondition
/// (malformed files, non-Hermitian matrices, bad flag values).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal cross-check fails. Indicates a bug in the
/// library, not bad input.
class internal_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Dense 2x2 complex matrix, row major.
struct Mat2 {
    std::array<cplx, 4> e{};

    cplx& operator()(int r, int c) { return e[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[2 * r + c]; }

    static Mat2 zero() { return {}; }
    static Mat2 identity() {
        Mat2 m;
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        return m;
    }

    Mat2 adjoint() const {
        Mat2 m;
        m(0, 0) = std::conj((*this)(0, 0));
        m(0, 1) = std::conj((*this)(1, 0));
        m(1, 0) = std::conj((*this)(0, 1));
        m(1, 1) = std::conj((*this)(1, 1));
        return m;
    }

    Mat2 operator+(const Mat2& o) const {
        Mat2 m;
        for (int i = 0; i < 4; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }
    Mat2 operator-(const Mat2& o) const {
        Mat2 m;
        for (int i = 0; i < 4; ++i) m.e[i] = e[i] - o.e[i];
        return m;
    }
    Mat2 operator*(const Mat2& o) const {
        Mat2 m;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                m(r, c) = (*this)(r, 0) * o(0, c) + (*this)(r, 1) * o(1, c);
        return m;
    }
    Mat2 operator*(cplx s) const {
        Mat2 m;
        for (int i = 0; i < 4; ++i) m.e[i] = e[i] * s;
        return m;
    }

    cplx trace() const { return e[0] + e[3]; }

    /// max |entry| of (this - o)
    double max_abs_diff(const Mat2& o) const {
        double m = 0.0;
        for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(e[i] - o.e[i]));
        return m;
    }
};

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

} // namespace cliffspec
