#include "diffwalk/spiral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diffwalk {

namespace {

struct Curve {
    std::vector<double> xs;  // in refined-cell units
    std::vector<double> ys;
};

Curve sample_arm(const SpiralParams& p, double angle_offset) {
    const double cx = static_cast<double>(p.base_width) / 2.0;
    const double cy = static_cast<double>(p.base_height) / 2.0;
    const double theta_max = 2.0 * std::numbers::pi * p.turns;
    const auto s = static_cast<double>(p.scale);
    Curve c;
    c.xs.resize(p.curve_samples);
    c.ys.resize(p.curve_samples);
    for (std::size_t k = 0; k < p.curve_samples; ++k) {
        const double t = theta_max * static_cast<double>(k) /
                         static_cast<double>(p.curve_samples - 1);
        const double r = p.inner_radius + p.growth * t;
        c.xs[k] = (cx + r * std::cos(t + angle_offset)) * s;
        c.ys[k] = (cy + r * std::sin(t + angle_offset)) * s;
    }
    return c;
}

}  // namespace

std::vector<std::size_t> SpiralRaster::arm_nodes(int arm, std::size_t count, double lo,
                                                 double hi) const {
    const auto& line = centerlines.at(static_cast<std::size_t>(arm));
    const std::size_t samples = line.size() / 2;
    std::vector<std::size_t> nodes;
    nodes.reserve(count);
    const double cell = density.cell_size();
    for (std::size_t k = 0; k < count; ++k) {
        const double f = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) /
                                                    static_cast<double>(count - 1);
        const auto idx = static_cast<std::size_t>(f * static_cast<double>(samples));
        const auto col = static_cast<std::size_t>(line[2 * idx] / cell);
        const auto row = static_cast<std::size_t>(line[2 * idx + 1] / cell);
        nodes.push_back(row * width + col);
    }
    return nodes;
}

SpiralRaster generate_spiral(const SpiralParams& p) {
    if (p.scale == 0 || p.curve_samples < 2) {
        throw std::invalid_argument("generate_spiral: invalid parameters");
    }
    const std::size_t w = p.base_width * p.scale;
    const std::size_t h = p.base_height * p.scale;
    const Curve arms[2] = {sample_arm(p, 0.0), sample_arm(p, std::numbers::pi)};
    const double hw2 = (p.arm_width / 2.0) * (p.arm_width / 2.0);

    // The arm mask is rasterized once at base resolution and refined by cell
    // subdivision, so every scale discretizes the same density field.
    std::vector<int> base_arm(p.base_width * p.base_height, -1);
    for (std::size_t row = 0; row < p.base_height; ++row) {
        const double cy = static_cast<double>(row) + 0.5;
        for (std::size_t col = 0; col < p.base_width; ++col) {
            const double cx = static_cast<double>(col) + 0.5;
            for (int a = 0; a < 2; ++a) {
                double best = hw2 + 1.0;
                for (std::size_t k = 0; k < p.curve_samples; ++k) {
                    const double dx = cx - arms[a].xs[k] / static_cast<double>(p.scale);
                    const double dy = cy - arms[a].ys[k] / static_cast<double>(p.scale);
                    const double d2 = dx * dx + dy * dy;
                    if (d2 < best) best = d2;
                }
                if (best <= hw2) {
                    base_arm[row * p.base_width + col] = a;
                    break;
                }
            }
        }
    }

    std::vector<double> rho(w * h, p.rho_low);
    std::vector<int> arm_id(w * h, -1);
    for (std::size_t row = 0; row < h; ++row) {
        for (std::size_t col = 0; col < w; ++col) {
            const int a = base_arm[(row / p.scale) * p.base_width + col / p.scale];
            if (a >= 0) {
                rho[row * w + col] = p.rho_high;
                arm_id[row * w + col] = a;
            }
        }
    }

    // "right arm": the one whose mid-parameter point has the larger x
    const std::size_t mid = p.curve_samples / 2;
    const int right = arms[1].xs[mid] > arms[0].xs[mid] ? 1 : 0;
    const auto src_col = static_cast<std::size_t>(arms[right].xs[mid]);
    const auto src_row = static_cast<std::size_t>(arms[right].ys[mid]);

    const double cell = p.cell_size / static_cast<double>(p.scale);
    SpiralRaster out{RasterDensity2D(w, h, cell, std::move(rho)),
                     std::move(arm_id),
                     src_row * w + src_col,
                     w,
                     h,
                     {}};
    for (const auto& arm : arms) {
        std::vector<double> line;
        line.reserve(2 * p.curve_samples);
        for (std::size_t k = 0; k < p.curve_samples; ++k) {
            line.push_back(arm.xs[k] * cell);
            line.push_back(arm.ys[k] * cell);
        }
        out.centerlines.push_back(std::move(line));
    }
    // keep centerline order: index 0 = source arm's opposite? store as sampled (0, pi);
    // callers use source_arm() to know which one holds the impulse.
    out.source_arm_index = right;
    return out;
}

}  // namespace diffwalk
