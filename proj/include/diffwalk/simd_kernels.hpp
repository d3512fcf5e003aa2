#pragma once

#include <cstddef>
#include <string>

namespace diffwalk::kernels {

enum class Boundary { Reflecting, AbsorbingZero };

// Inner-loop kernels. Each has a scalar reference implementation plus SIMD
// variants (AVX2, NEON) selected once at startup; DIFFWALK_SIMD=scalar|avx2|neon
// in the environment forces a specific variant.
struct Kernels {
    // out[i] = phi[i] + lam[i] * (phi[i-1] + phi[i+1] - 2 phi[i]),
    // ghost values per boundary rule.
    void (*stencil_1d)(const double* phi, const double* lam, double* out,
                       std::size_t n, Boundary boundary);
    // Five-point stencil on a width x height row-major grid.
    void (*stencil_2d)(const double* phi, const double* lam, double* out,
                       std::size_t width, std::size_t height, Boundary boundary);
    // y = M x for a row-major m x m matrix.
    void (*matvec)(const double* matrix, const double* x, double* y, std::size_t m);
    const char* name;
};

const Kernels& active();

// Reference implementations, kept available for equivalence tests.
extern const Kernels scalar_kernels;
#if defined(__x86_64__) || defined(_M_X64)
extern const Kernels avx2_kernels;
bool avx2_available();
#endif
#if defined(__ARM_NEON)
extern const Kernels neon_kernels;
#endif

}  // namespace diffwalk::kernels
