#include "diffwalk/simd_kernels.hpp"

namespace diffwalk::kernels {

namespace {

inline double ghost(double boundary_node, Boundary b) {
    return b == Boundary::Reflecting ? boundary_node : 0.0;
}

void stencil_1d_scalar(const double* phi, const double* lam, double* out,
                       std::size_t n, Boundary b) {
    if (n == 1) {
        // both neighbors are ghosts
        const double g = ghost(phi[0], b);
        out[0] = phi[0] + lam[0] * (2.0 * g - 2.0 * phi[0]);
        return;
    }
    out[0] = phi[0] + lam[0] * (ghost(phi[0], b) + phi[1] - 2.0 * phi[0]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out[i] = phi[i] + lam[i] * (phi[i - 1] + phi[i + 1] - 2.0 * phi[i]);
    }
    out[n - 1] = phi[n - 1] + lam[n - 1] * (phi[n - 2] + ghost(phi[n - 1], b) - 2.0 * phi[n - 1]);
}

void stencil_2d_scalar(const double* phi, const double* lam, double* out,
                       std::size_t width, std::size_t height, Boundary b) {
    for (std::size_t r = 0; r < height; ++r) {
        const double* row = phi + r * width;
        const double* north = r > 0 ? row - width : nullptr;
        const double* south = r + 1 < height ? row + width : nullptr;
        double* orow = out + r * width;
        const double* lrow = lam + r * width;
        for (std::size_t c = 0; c < width; ++c) {
            const double center = row[c];
            const double w = c > 0 ? row[c - 1] : ghost(center, b);
            const double e = c + 1 < width ? row[c + 1] : ghost(center, b);
            const double nn = north ? north[c] : ghost(center, b);
            const double ss = south ? south[c] : ghost(center, b);
            orow[c] = center + lrow[c] * (w + e + nn + ss - 4.0 * center);
        }
    }
}

void matvec_scalar(const double* matrix, const double* x, double* y, std::size_t m) {
    for (std::size_t r = 0; r < m; ++r) {
        const double* row = matrix + r * m;
        double acc = 0.0;
        for (std::size_t c = 0; c < m; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
}

}  // namespace

const Kernels scalar_kernels = {stencil_1d_scalar, stencil_2d_scalar, matvec_scalar, "scalar"};

}  // namespace diffwalk::kernels
