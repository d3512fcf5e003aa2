#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "diffwalk/solver.hpp"

namespace diffwalk {

struct LabeledPoint {
    double x = 0.0;
    double y = 0.0;  // ignored on 1D grids
    std::string label;
};

struct KernelMatrix {
    std::size_t n = 0;
    std::vector<double> values;         // row-major, symmetrized
    double asymmetry = 0.0;             // max|K - K^T| / max|K| before symmetrization
    double min_eigenvalue = 0.0;
    double trace = 0.0;

    double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

// Everything a kernel solve needs besides the source: the grid, the per-node
// diffusion coefficients, the per-node data density, and the schedule.
struct KernelSolveSetup {
    Grid grid;
    std::vector<double> d_field;
    std::vector<double> rho_field;
    double dt = 0.1;
    double t = 1.0;
    Boundary boundary = Boundary::AbsorbingZero;
    bool renormalize = true;
};

// psi(target | source) for each target: impulse at the snapped source node,
// solve to time t, weight by the data density.
std::vector<double> transition_kernel_row(const KernelSolveSetup& setup, double source_x,
                                          double source_y,
                                          const std::vector<std::size_t>& target_nodes);

std::size_t snap_to_grid(const Grid& grid, double x, double y);

KernelMatrix kernel_matrix(const KernelSolveSetup& setup,
                           const std::vector<std::pair<double, double>>& points);

struct Classification {
    std::string argmax;
    std::map<std::string, double> posterior;  // sums to 1
};

Classification classify(const KernelSolveSetup& setup, const std::vector<LabeledPoint>& labeled,
                        double query_x, double query_y);

}  // namespace diffwalk
