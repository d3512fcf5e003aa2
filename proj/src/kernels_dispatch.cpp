#include <cstdlib>
#include <stdexcept>
#include <string>

#include "diffwalk/simd_kernels.hpp"

namespace diffwalk::kernels {

namespace {

const Kernels& select() {
    const char* force = std::getenv("DIFFWALK_SIMD");
    if (force != nullptr) {
        const std::string want(force);
        if (want == "scalar") return scalar_kernels;
#if defined(__x86_64__) || defined(_M_X64)
        if (want == "avx2") {
            if (!avx2_available()) throw std::runtime_error("DIFFWALK_SIMD=avx2: CPU lacks AVX2");
            return avx2_kernels;
        }
#endif
#if defined(__ARM_NEON)
        if (want == "neon") return neon_kernels;
#endif
        throw std::runtime_error("DIFFWALK_SIMD: unknown variant '" + want + "'");
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return avx2_kernels;
#endif
#if defined(__ARM_NEON)
    return neon_kernels;
#else
    return scalar_kernels;
#endif
}

}  // namespace

const Kernels& active() {
    static const Kernels& chosen = select();
    return chosen;
}

}  // namespace diffwalk::kernels
