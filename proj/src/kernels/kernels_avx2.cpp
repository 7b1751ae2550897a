#include "coopfb/kernels.hpp"

#if defined(COOPFB_WITH_AVX2)

#include <immintrin.h>

// Complex doubles are stored interleaved [re, im], two complex per __m256d.
// Odd lengths fall through to a scalar tail.

namespace coopfb::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

cplx cdotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    // negates the imag-slot products so acc_im pairs sum to ar*bi - ai*br
    const __m256d odd_neg = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        __m256d vb_sw = _mm256_xor_pd(_mm256_permute_pd(vb, 0x5), odd_neg);
        acc_im = _mm256_fmadd_pd(va, vb_sw, acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double frob_sq_avx2(const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_fmadd_pd(va, va, acc);
    }
    double r = hsum(acc);
    for (; i < n; ++i) {
        r += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return r;
}

void rot2_avx2(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
    double* px = reinterpret_cast<double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d c_v = _mm256_set1_pd(c);
    const __m256d sr_v = _mm256_set1_pd(s.real());
    const __m256d si_v = _mm256_set1_pd(s.imag());
    const __m256d all_neg = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(px + 2 * i);
        __m256d vy = _mm256_loadu_pd(py + 2 * i);
        // s*x = addsub(sr*x, si*swap(x))
        __m256d sx = _mm256_addsub_pd(_mm256_mul_pd(sr_v, vx),
                                      _mm256_mul_pd(si_v, _mm256_permute_pd(vx, 0x5)));
        // conj(s)*y = addsub(sr*y, -(si*swap(y)))
        __m256d scy = _mm256_addsub_pd(
            _mm256_mul_pd(sr_v, vy),
            _mm256_xor_pd(_mm256_mul_pd(si_v, _mm256_permute_pd(vy, 0x5)), all_neg));
        _mm256_storeu_pd(px + 2 * i, _mm256_fmsub_pd(c_v, vx, scy));
        _mm256_storeu_pd(py + 2 * i, _mm256_fmadd_pd(c_v, vy, sx));
    }
    const cplx sc = std::conj(s);
    for (; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = c * xi - sc * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace

const Backend& avx2_backend() {
    static const Backend backend{"avx2", cdotc_avx2, frob_sq_avx2, rot2_avx2};
    return backend;
}

}  // namespace coopfb::kernels

#endif  // COOPFB_WITH_AVX2
