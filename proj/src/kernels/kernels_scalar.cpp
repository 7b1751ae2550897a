#include "coopfb/kernels.hpp"

namespace coopfb::kernels {

namespace {

cplx cdotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double frob_sq_scalar(const cplx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return acc;
}

void rot2_scalar(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
    const cplx sc = std::conj(s);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = c * xi - sc * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", cdotc_scalar, frob_sq_scalar, rot2_scalar};
    return backend;
}

}  // namespace coopfb::kernels
