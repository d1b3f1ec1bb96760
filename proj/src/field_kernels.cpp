#include "cliffspec/field_kernels.hpp"

namespace cliffspec {

// Reference operation sequence, shared verbatim by every ISA variant:
//
//   per row:    ryz = y*y + z*z
//               gy0 = a01*y + a02*z     (y/z part of (Ap).x)
//               gy1 = a11*y + a12*z     (y/z part of (Ap).y)
//               gy2 = a12*y + a22*z     (y/z part of (Ap).z)
//   per point:  r2  = x*x + ryz
//               g0  = a00*x + gy0
//               g1  = a01*x + gy1
//               g2  = a02*x + gy2
//               q   = (x*g0 + y*g1) + z*g2
//               out = ((r2*r2 + two_beta*r2) - 4.0*q) + c
//
// Any change here must be mirrored in field_kernels_avx2.cpp and
// field_kernels_neon.cpp; the equivalence tests compare results bitwise.
void field_row_scalar(const QuarticFieldCoeffs& k, const double* xs, std::size_t n, double y,
                      double z, double* out) {
    const double ryz = y * y + z * z;
    const double gy0 = k.a01 * y + k.a02 * z;
    const double gy1 = k.a11 * y + k.a12 * z;
    const double gy2 = k.a12 * y + k.a22 * z;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = xs[i];
        const double r2 = x * x + ryz;
        const double g0 = k.a00 * x + gy0;
        const double g1 = k.a01 * x + gy1;
        const double g2 = k.a02 * x + gy2;
        const double q = (x * g0 + y * g1) + z * g2;
        out[i] = ((r2 * r2 + k.two_beta * r2) - 4.0 * q) + k.c;
    }
}

double field_eval_point(const QuarticFieldCoeffs& k, double x, double y, double z) {
    double v;
    field_row_scalar(k, &x, 1, y, z, &v);
    return v;
}

FieldIsa field_isa_available() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return FieldIsa::Avx2;
    return FieldIsa::Scalar;
#elif defined(__aarch64__)
    return FieldIsa::Neon;
#else
    return FieldIsa::Scalar;
#endif
}

const char* field_isa_name(FieldIsa isa) {
    switch (isa) {
    case FieldIsa::Avx2: return "avx2";
    case FieldIsa::Neon: return "neon";
    default: return "scalar";
    }
}

FieldRowFn field_row_kernel(FieldIsa isa) {
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case FieldIsa::Avx2: return &field_row_avx2;
#endif
#if defined(__aarch64__)
    case FieldIsa::Neon: return &field_row_neon;
#endif
    default: return &field_row_scalar;
    }
}

FieldRowFn field_row_kernel() {
    static const FieldRowFn fn = field_row_kernel(field_isa_available());
    return fn;
}

} // namespace cliffspec
