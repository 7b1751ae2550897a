#include "coopfb/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace coopfb::kernels {

namespace {

bool avx2_supported() {
#if defined(COOPFB_WITH_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Backend* detect_best() {
#if defined(COOPFB_WITH_AVX2)
    if (avx2_supported()) return &avx2_backend();
#endif
    return &scalar_backend();
}

const Backend* resolve(const std::string& name) {
    if (name == "auto") return detect_best();
    if (name == "scalar") return &scalar_backend();
#if defined(COOPFB_WITH_AVX2)
    if (name == "avx2") {
        if (!avx2_supported())
            throw std::invalid_argument("kernel backend 'avx2' not supported on this CPU");
        return &avx2_backend();
    }
#endif
    throw std::invalid_argument("unknown kernel backend '" + name + "'");
}

std::atomic<const Backend*>& slot() {
    static std::atomic<const Backend*> s = [] {
        const char* env = std::getenv("COOPFB_KERNEL");
        return resolve(env ? env : "auto");
    }();
    return s;
}

}  // namespace

const Backend& active() { return *slot().load(std::memory_order_relaxed); }

void select(const std::string& name) {
    slot().store(resolve(name), std::memory_order_relaxed);
}

}  // namespace coopfb::kernels
