#pragma once

#include <cstddef>

namespace cliffspec {

/// Packed coefficients of the centered quartic
///   D(p) = ||p||^4 + two_beta * ||p||^2 - 4 <Ap, p> + c
/// with A symmetric (a00..a22 are its six distinct entries).
struct QuarticFieldCoeffs {
    double two_beta = 0.0;
    double c = 0.0;
    double a00 = 0.0, a01 = 0.0, a02 = 0.0;
    double a11 = 0.0, a12 = 0.0, a22 = 0.0;
};

/// Row kernel: out[i] = D(xs[i], y, z) for i in [0, n).
///
/// Every kernel performs the identical per-point operation sequence
/// (documented in field_kernels.cpp), and the build disables FP
/// contraction, so scalar and SIMD variants are bit-identical.
using FieldRowFn = void (*)(const QuarticFieldCoeffs&, const double* xs, std::size_t n,
                            double y, double z, double* out);

void field_row_scalar(const QuarticFieldCoeffs& k, const double* xs, std::size_t n, double y,
                      double z, double* out);

#if defined(__x86_64__) || defined(_M_X64)
void field_row_avx2(const QuarticFieldCoeffs& k, const double* xs, std::size_t n, double y,
                    double z, double* out);
#endif
#if defined(__aarch64__)
void field_row_neon(const QuarticFieldCoeffs& k, const double* xs, std::size_t n, double y,
                    double z, double* out);
#endif

enum class FieldIsa { Scalar, Avx2, Neon };

/// Best instruction set usable on the running CPU.
FieldIsa field_isa_available();
const char* field_isa_name(FieldIsa isa);

FieldRowFn field_row_kernel(FieldIsa isa);

/// Kernel for field_isa_available(), resolved once.
FieldRowFn field_row_kernel();

/// Single-point convenience wrapper over the scalar kernel.
double field_eval_point(const QuarticFieldCoeffs& k, double x, double y, double z);

} // namespace cliffspec
