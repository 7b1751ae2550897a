#include "coopfb/rng.hpp"

#include <cmath>
#include <numbers>

namespace coopfb {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_key(uint64_t seed, std::initializer_list<uint64_t> words) {
    uint64_t h = seed;
    for (uint64_t w : words) h = mix64(h ^ mix64(w));
    return h;
}

double RandomStream::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

void RandomStream::gaussian_pair(double& a, double& b) {
    // 1 - u keeps the log argument in (0, 1]
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    a = r * std::cos(phi);
    b = r * std::sin(phi);
}

cplx RandomStream::complex_gaussian() {
    double a, b;
    gaussian_pair(a, b);
    return {a * std::numbers::sqrt2 / 2.0, b * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix RandomStream::gaussian_matrix(int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = complex_gaussian();
    return m;
}

}  // namespace coopfb
