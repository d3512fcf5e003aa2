#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "diffwalk/simd_kernels.hpp"

namespace diffwalk::kernels {

namespace {

inline double ghost(double boundary_node, Boundary b) {
    return b == Boundary::Reflecting ? boundary_node : 0.0;
}

// One interior update lane-for-lane identical to the scalar expression
// (mul + add, no FMA contraction).
inline __m256d stencil_lane(__m256d center, __m256d left, __m256d right, __m256d lam) {
    const __m256d two = _mm256_set1_pd(2.0);
    __m256d sum = _mm256_add_pd(left, right);
    sum = _mm256_sub_pd(sum, _mm256_mul_pd(two, center));
    return _mm256_add_pd(center, _mm256_mul_pd(lam, sum));
}

void stencil_1d_avx2(const double* phi, const double* lam, double* out,
                     std::size_t n, Boundary b) {
    if (n == 1) {
        const double g = ghost(phi[0], b);
        out[0] = phi[0] + lam[0] * (2.0 * g - 2.0 * phi[0]);
        return;
    }
    out[0] = phi[0] + lam[0] * (ghost(phi[0], b) + phi[1] - 2.0 * phi[0]);
    std::size_t i = 1;
    for (; i + 5 <= n; i += 4) {
        const __m256d c = _mm256_loadu_pd(phi + i);
        const __m256d l = _mm256_loadu_pd(phi + i - 1);
        const __m256d r = _mm256_loadu_pd(phi + i + 1);
        const __m256d lm = _mm256_loadu_pd(lam + i);
        _mm256_storeu_pd(out + i, stencil_lane(c, l, r, lm));
    }
    for (; i + 1 < n; ++i) {
        out[i] = phi[i] + lam[i] * (phi[i - 1] + phi[i + 1] - 2.0 * phi[i]);
    }
    out[n - 1] = phi[n - 1] + lam[n - 1] * (phi[n - 2] + ghost(phi[n - 1], b) - 2.0 * phi[n - 1]);
}

void stencil_2d_avx2(const double* phi, const double* lam, double* out,
                     std::size_t width, std::size_t height, Boundary b) {
    const __m256d four = _mm256_set1_pd(4.0);
    for (std::size_t r = 0; r < height; ++r) {
        const double* row = phi + r * width;
        const double* north = r > 0 ? row - width : nullptr;
        const double* south = r + 1 < height ? row + width : nullptr;
        double* orow = out + r * width;
        const double* lrow = lam + r * width;

        auto scalar_at = [&](std::size_t c) {
            const double center = row[c];
            const double w = c > 0 ? row[c - 1] : ghost(center, b);
            const double e = c + 1 < width ? row[c + 1] : ghost(center, b);
            const double nn = north ? north[c] : ghost(center, b);
            const double ss = south ? south[c] : ghost(center, b);
            orow[c] = center + lrow[c] * (w + e + nn + ss - 4.0 * center);
        };

        scalar_at(0);
        std::size_t c = 1;
        if (width >= 2) {
            for (; c + 5 <= width; c += 4) {
                const __m256d center = _mm256_loadu_pd(row + c);
                const __m256d w = _mm256_loadu_pd(row + c - 1);
                const __m256d e = _mm256_loadu_pd(row + c + 1);
                const __m256d nn = north ? _mm256_loadu_pd(north + c)
                                         : (b == Boundary::Reflecting ? center
                                                                      : _mm256_setzero_pd());
                const __m256d ss = south ? _mm256_loadu_pd(south + c)
                                         : (b == Boundary::Reflecting ? center
                                                                      : _mm256_setzero_pd());
                const __m256d lm = _mm256_loadu_pd(lrow + c);
                // association mirrors the scalar kernel for bit-identical output
                __m256d sum = _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(w, e), nn), ss);
                sum = _mm256_sub_pd(sum, _mm256_mul_pd(four, center));
                _mm256_storeu_pd(orow + c, _mm256_add_pd(center, _mm256_mul_pd(lm, sum)));
            }
            for (; c < width; ++c) scalar_at(c);
        }
    }
}

void matvec_avx2(const double* matrix, const double* x, double* y, std::size_t m) {
    for (std::size_t r = 0; r < m; ++r) {
        const double* row = matrix + r * m;
        __m256d acc0 = _mm256_setzero_pd();
        __m256d acc1 = _mm256_setzero_pd();
        std::size_t c = 0;
        for (; c + 8 <= m; c += 8) {
            acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(row + c),
                                                     _mm256_loadu_pd(x + c)));
            acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(row + c + 4),
                                                     _mm256_loadu_pd(x + c + 4)));
        }
        __m256d acc = _mm256_add_pd(acc0, acc1);
        double lanes[4];
        _mm256_storeu_pd(lanes, acc);
        double total = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
        for (; c < m; ++c) total += row[c] * x[c];
        y[r] = total;
    }
}

}  // namespace

const Kernels avx2_kernels = {stencil_1d_avx2, stencil_2d_avx2, matvec_avx2, "avx2"};

bool avx2_available() { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace diffwalk::kernels

#endif  // x86_64
