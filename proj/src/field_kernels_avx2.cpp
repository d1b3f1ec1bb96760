#include "cliffspec/field_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace cliffspec {

// Four lanes of the reference sequence in field_kernels.cpp. Plain
// mul/add/sub only (no FMA), so each lane rounds exactly like the scalar
// kernel.
void field_row_avx2(const QuarticFieldCoeffs& k, const double* xs, std::size_t n, double y,
                    double z, double* out) {
    const double ryz_s = y * y + z * z;
    const double gy0_s = k.a01 * y + k.a02 * z;
    const double gy1_s = k.a11 * y + k.a12 * z;
    const double gy2_s = k.a12 * y + k.a22 * z;

    const __m256d ryz = _mm256_set1_pd(ryz_s);
    const __m256d gy0 = _mm256_set1_pd(gy0_s);
    const __m256d gy1 = _mm256_set1_pd(gy1_s);
    const __m256d gy2 = _mm256_set1_pd(gy2_s);
    const __m256d a00 = _mm256_set1_pd(k.a00);
    const __m256d a01 = _mm256_set1_pd(k.a01);
    const __m256d a02 = _mm256_set1_pd(k.a02);
    const __m256d vy = _mm256_set1_pd(y);
    const __m256d vz = _mm256_set1_pd(z);
    const __m256d two_beta = _mm256_set1_pd(k.two_beta);
    const __m256d four = _mm256_set1_pd(4.0);
    const __m256d vc = _mm256_set1_pd(k.c);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(xs + i);
        const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(x, x), ryz);
        const __m256d g0 = _mm256_add_pd(_mm256_mul_pd(a00, x), gy0);
        const __m256d g1 = _mm256_add_pd(_mm256_mul_pd(a01, x), gy1);
        const __m256d g2 = _mm256_add_pd(_mm256_mul_pd(a02, x), gy2);
        const __m256d q = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(x, g0), _mm256_mul_pd(vy, g1)), _mm256_mul_pd(vz, g2));
        const __m256d poly = _mm256_sub_pd(
            _mm256_add_pd(_mm256_mul_pd(r2, r2), _mm256_mul_pd(two_beta, r2)),
            _mm256_mul_pd(four, q));
        _mm256_storeu_pd(out + i, _mm256_add_pd(poly, vc));
    }
    if (i < n) field_row_scalar(k, xs + i, n - i, y, z, out + i);
}

} // namespace cliffspec

#endif
