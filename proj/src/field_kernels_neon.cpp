#include "cliffspec/field_kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace cliffspec {

// Two lanes of the reference sequence in field_kernels.cpp. vmulq/vaddq
// only (no fused ops), matching scalar rounding per lane.
void field_row_neon(const QuarticFieldCoeffs& k, const double* xs, std::size_t n, double y,
                    double z, double* out) {
    const double ryz_s = y * y + z * z;
    const double gy0_s = k.a01 * y + k.a02 * z;
    const double gy1_s = k.a11 * y + k.a12 * z;
    const double gy2_s = k.a12 * y + k.a22 * z;

    const float64x2_t ryz = vdupq_n_f64(ryz_s);
    const float64x2_t gy0 = vdupq_n_f64(gy0_s);
    const float64x2_t gy1 = vdupq_n_f64(gy1_s);
    const float64x2_t gy2 = vdupq_n_f64(gy2_s);
    const float64x2_t a00 = vdupq_n_f64(k.a00);
    const float64x2_t a01 = vdupq_n_f64(k.a01);
    const float64x2_t a02 = vdupq_n_f64(k.a02);
    const float64x2_t vy = vdupq_n_f64(y);
    const float64x2_t vz = vdupq_n_f64(z);
    const float64x2_t two_beta = vdupq_n_f64(k.two_beta);
    const float64x2_t four = vdupq_n_f64(4.0);
    const float64x2_t vc = vdupq_n_f64(k.c);

    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vld1q_f64(xs + i);
        const float64x2_t r2 = vaddq_f64(vmulq_f64(x, x), ryz);
        const float64x2_t g0 = vaddq_f64(vmulq_f64(a00, x), gy0);
        const float64x2_t g1 = vaddq_f64(vmulq_f64(a01, x), gy1);
        const float64x2_t g2 = vaddq_f64(vmulq_f64(a02, x), gy2);
        const float64x2_t q =
            vaddq_f64(vaddq_f64(vmulq_f64(x, g0), vmulq_f64(vy, g1)), vmulq_f64(vz, g2));
        const float64x2_t poly = vsubq_f64(
            vaddq_f64(vmulq_f64(r2, r2), vmulq_f64(two_beta, r2)), vmulq_f64(four, q));
        vst1q_f64(out + i, vaddq_f64(poly, vc));
    }
    if (i < n) field_row_scalar(k, xs + i, n - i, y, z, out + i);
}

} // namespace cliffspec

#endif
