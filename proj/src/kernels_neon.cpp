#if defined(__ARM_NEON)

#include <arm_neon.h>

#include "diffwalk/simd_kernels.hpp"

namespace diffwalk::kernels {

namespace {

inline double ghost(double boundary_node, Boundary b) {
    return b == Boundary::Reflecting ? boundary_node : 0.0;
}

void stencil_1d_neon(const double* phi, const double* lam, double* out,
                     std::size_t n, Boundary b) {
    if (n == 1) {
        const double g = ghost(phi[0], b);
        out[0] = phi[0] + lam[0] * (2.0 * g - 2.0 * phi[0]);
        return;
    }
    out[0] = phi[0] + lam[0] * (ghost(phi[0], b) + phi[1] - 2.0 * phi[0]);
    const float64x2_t two = vdupq_n_f64(2.0);
    std::size_t i = 1;
    for (; i + 3 <= n; i += 2) {
        const float64x2_t c = vld1q_f64(phi + i);
        const float64x2_t l = vld1q_f64(phi + i - 1);
        const float64x2_t r = vld1q_f64(phi + i + 1);
        const float64x2_t lm = vld1q_f64(lam + i);
        float64x2_t sum = vsubq_f64(vaddq_f64(l, r), vmulq_f64(two, c));
        vst1q_f64(out + i, vaddq_f64(c, vmulq_f64(lm, sum)));
    }
    for (; i + 1 < n; ++i) {
        out[i] = phi[i] + lam[i] * (phi[i - 1] + phi[i + 1] - 2.0 * phi[i]);
    }
    out[n - 1] = phi[n - 1] + lam[n - 1] * (phi[n - 2] + ghost(phi[n - 1], b) - 2.0 * phi[n - 1]);
}

void stencil_2d_neon(const double* phi, const double* lam, double* out,
                     std::size_t width, std::size_t height, Boundary b) {
    const float64x2_t four = vdupq_n_f64(4.0);
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
            for (; c + 3 <= width; c += 2) {
                const float64x2_t center = vld1q_f64(row + c);
                const float64x2_t w = vld1q_f64(row + c - 1);
                const float64x2_t e = vld1q_f64(row + c + 1);
                const float64x2_t nn = north ? vld1q_f64(north + c)
                                             : (b == Boundary::Reflecting ? center
                                                                          : vdupq_n_f64(0.0));
                const float64x2_t ss = south ? vld1q_f64(south + c)
                                             : (b == Boundary::Reflecting ? center
                                                                          : vdupq_n_f64(0.0));
                const float64x2_t lm = vld1q_f64(lrow + c);
                // association mirrors the scalar kernel for bit-identical output
                float64x2_t sum = vaddq_f64(vaddq_f64(vaddq_f64(w, e), nn), ss);
                sum = vsubq_f64(sum, vmulq_f64(four, center));
                vst1q_f64(orow + c, vaddq_f64(center, vmulq_f64(lm, sum)));
            }
            for (; c < width; ++c) scalar_at(c);
        }
    }
}

void matvec_neon(const double* matrix, const double* x, double* y, std::size_t m) {
    for (std::size_t r = 0; r < m; ++r) {
        const double* row = matrix + r * m;
        float64x2_t acc0 = vdupq_n_f64(0.0);
        float64x2_t acc1 = vdupq_n_f64(0.0);
        std::size_t c = 0;
        for (; c + 4 <= m; c += 4) {
            acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(row + c), vld1q_f64(x + c)));
            acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(row + c + 2), vld1q_f64(x + c + 2)));
        }
        const float64x2_t acc = vaddq_f64(acc0, acc1);
        double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
        for (; c < m; ++c) total += row[c] * x[c];
        y[r] = total;
    }
}

}  // namespace

const Kernels neon_kernels = {stencil_1d_neon, stencil_2d_neon, matvec_neon, "neon"};

}  // namespace diffwalk::kernels

#endif  // __ARM_NEON
