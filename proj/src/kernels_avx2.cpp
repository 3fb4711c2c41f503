// AVX2/FMA variants of the complex-double kernels. Compiled with
// -mavx2 -mfma; only reached after the runtime cpuid check.

#include "qn/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace qn::kernels {

namespace {

// two interleaved complex doubles per __m256d: [re0, im0, re1, im1]

inline __m256d cmul(__m256d ar, __m256d ai, __m256d x) {
    // (ar + i ai) * x, with ar/ai broadcast scalars
    __m256d xswap = _mm256_permute_pd(x, 0x5);  // [im0, re0, im1, re1]
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xswap));
}

void site2x2_avx2(const cd* x0, const cd* x1, cd* y0, cd* y1,
                  cd m00, cd m01, cd m10, cd m11, std::size_t n) {
    const __m256d a00r = _mm256_set1_pd(m00.real()), a00i = _mm256_set1_pd(m00.imag());
    const __m256d a01r = _mm256_set1_pd(m01.real()), a01i = _mm256_set1_pd(m01.imag());
    const __m256d a10r = _mm256_set1_pd(m10.real()), a10i = _mm256_set1_pd(m10.imag());
    const __m256d a11r = _mm256_set1_pd(m11.real()), a11i = _mm256_set1_pd(m11.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d a = _mm256_loadu_pd(reinterpret_cast<const double*>(x0 + i));
        __m256d b = _mm256_loadu_pd(reinterpret_cast<const double*>(x1 + i));
        __m256d r0 = _mm256_add_pd(cmul(a00r, a00i, a), cmul(a01r, a01i, b));
        __m256d r1 = _mm256_add_pd(cmul(a10r, a10i, a), cmul(a11r, a11i, b));
        _mm256_storeu_pd(reinterpret_cast<double*>(y0 + i), r0);
        _mm256_storeu_pd(reinterpret_cast<double*>(y1 + i), r1);
    }
    for (; i < n; ++i) {
        cd a = x0[i], b = x1[i];
        y0[i] = m00 * a + m01 * b;
        y1[i] = m10 * a + m11 * b;
    }
}

cd dot_avx2(const cd* x, const cd* y, std::size_t n) {
    // re += xr*yr + xi*yi ;  im += xr*yi - xi*yr
    __m256d accr = _mm256_setzero_pd();
    __m256d acci = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        __m256d yv = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        __m256d yswap = _mm256_permute_pd(yv, 0x5);
        accr = _mm256_fmadd_pd(xv, yv, accr);     // xr*yr, xi*yi pairs
        acci = _mm256_fmadd_pd(xv, yswap, acci);  // xr*yi, xi*yr pairs
    }
    alignas(32) double br[4], bi[4];
    _mm256_store_pd(br, accr);
    _mm256_store_pd(bi, acci);
    double re = br[0] + br[1] + br[2] + br[3];
    double im = (bi[0] - bi[1]) + (bi[2] - bi[3]);
    for (; i < n; ++i) {
        cd t = std::conj(x[i]) * y[i];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

void axpy_avx2(cd a, const cd* x, cd* y, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        __m256d yv = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        yv = _mm256_add_pd(yv, cmul(ar, ai, xv));
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(cd a, cd* x, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(reinterpret_cast<double*>(x + i));
        _mm256_storeu_pd(reinterpret_cast<double*>(x + i), cmul(ar, ai, xv));
    }
    for (; i < n; ++i) x[i] *= a;
}

const Ops kAvx2{"avx2", site2x2_avx2, dot_avx2, axpy_avx2, scale_avx2};

}  // namespace

const Ops& avx2_ops() { return kAvx2; }

}  // namespace qn::kernels

#else

namespace qn::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace qn::kernels

#endif
