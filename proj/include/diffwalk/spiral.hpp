#pragma once

#include <cstddef>
#include <vector>

#include "diffwalk/density.hpp"

namespace diffwalk {

// Parameters of the bundled two-arm spiral density generator. Lengths are in
// cell units of the base raster; `scale` refines the raster while keeping the
// physical layout (cell_size shrinks accordingly).
struct SpiralParams {
    std::size_t base_width = 90;
    std::size_t base_height = 110;
    double cell_size = 0.1;       // physical size of a base cell
    double inner_radius = 6.0;    // cells
    double growth = 5.0;          // cells per radian
    double turns = 1.1;           // full turns per arm
    double arm_width = 5.0;       // cells
    double rho_high = 200.0;
    double rho_low = 1.0;
    std::size_t curve_samples = 4000;
    std::size_t scale = 1;
};

struct SpiralRaster {
    RasterDensity2D density;
    std::vector<int> arm_id;               // -1 background, 0/1 arm index, row-major
    std::size_t source_node;               // middle of the right arm
    std::size_t width;
    std::size_t height;
    int source_arm_index = 0;              // which arm carries the impulse

    // cell-center sample positions along each arm's centerline (node indices)
    std::vector<std::size_t> arm_nodes(int arm, std::size_t count, double lo = 0.15,
                                       double hi = 0.85) const;
    std::vector<std::vector<double>> centerlines;  // per arm: x0,y0,x1,y1,... (physical)
};

SpiralRaster generate_spiral(const SpiralParams& params);

}  // namespace diffwalk
