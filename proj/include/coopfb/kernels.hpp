#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Low-level arithmetic kernels used by the dense complex-matrix code.
// A scalar reference implementation always exists; on x86-64 an AVX2+FMA
// variant can be selected at runtime. Backends must agree to floating-point
// rounding (not bit-for-bit: FMA contraction reorders rounding), which the
// equivalence tests pin down.

namespace coopfb::kernels {

using cplx = std::complex<double>;

// sum_i conj(a[i]) * b[i]
using cdotc_fn = cplx (*)(const cplx* a, const cplx* b, std::size_t n);
// sum_i |a[i]|^2
using frob_sq_fn = double (*)(const cplx* a, std::size_t n);
// in-place unitary column rotation:
//   (x, y) <- (c*x - conj(s)*y, s*x + c*y),  c real, c^2 + |s|^2 = 1
using rot2_fn = void (*)(cplx* x, cplx* y, std::size_t n, double c, cplx s);

struct Backend {
    const char* name;
    cdotc_fn cdotc;
    frob_sq_fn frob_sq;
    rot2_fn rot2;
};

const Backend& scalar_backend();
#if defined(COOPFB_WITH_AVX2)
const Backend& avx2_backend();
#endif

// Active backend. Defaults to the best supported one; the COOPFB_KERNEL
// environment variable ("scalar", "avx2", "auto") overrides at startup.
const Backend& active();

// Select by name ("auto" re-detects). Throws std::invalid_argument on an
// unknown or unsupported name.
void select(const std::string& name);

inline cplx cdotc(const cplx* a, const cplx* b, std::size_t n) {
    return active().cdotc(a, b, n);
}
inline double frob_sq(const cplx* a, std::size_t n) {
    return active().frob_sq(a, n);
}
inline void rot2(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
    active().rot2(x, y, n, c, s);
}

}  // namespace coopfb::kernels
