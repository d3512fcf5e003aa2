#pragma once

#include <cstddef>
#include <vector>

#include "diffwalk/density.hpp"
#include "diffwalk/simd_kernels.hpp"

namespace diffwalk {

using kernels::Boundary;

// Regular 1D or 2D grid of nodes with equal spacing on all axes.
struct Grid {
    int dim = 1;
    std::size_t nx = 0;  // nodes along x
    std::size_t ny = 1;  // nodes along y (1 in 1D)
    double dx = 1.0;
    double origin_x = 0.0;
    double origin_y = 0.0;

    void validate() const;
    std::size_t node_count() const { return nx * ny; }
    double x_of(std::size_t col) const { return origin_x + dx * static_cast<double>(col); }
    double y_of(std::size_t row) const { return origin_y + dx * static_cast<double>(row); }
    std::size_t index(std::size_t col, std::size_t row = 0) const { return row * nx + col; }
    std::size_t nearest_node_1d(double x) const;
    std::size_t nearest_node_2d(double x, double y) const;
};

// Probability mass per node, row-major in 2D.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    double total_mass() const;  // fixed-order accumulation
};

// Per-node diffusion coefficients plus scheme parameters. Construction
// rejects configurations violating max(D) dt / dx^2 <= 1/(2 dim).
class SolverConfig {
public:
    SolverConfig(const Grid& grid, std::vector<double> d_field, double dt,
                 Boundary boundary, bool renormalize);

    const Grid& grid() const { return grid_; }
    const std::vector<double>& d_field() const { return d_field_; }
    const std::vector<double>& lambda() const { return lambda_; }
    double dt() const { return dt_; }
    Boundary boundary() const { return boundary_; }
    bool renormalize() const { return renormalize_; }

private:
    Grid grid_;
    std::vector<double> d_field_;
    std::vector<double> lambda_;  // D * dt / dx^2 per node
    double dt_;
    Boundary boundary_;
    bool renormalize_;
};

double stability_limit(double d_max, double dx, int dim);

ScalarField impulse_field(const Grid& grid, std::size_t node);

ScalarField step_1d(const ScalarField& phi, const SolverConfig& config);
ScalarField step_2d(const ScalarField& phi, const SolverConfig& config);

struct SolveResult {
    ScalarField field;
    std::size_t steps;
    double simulated_time;  // steps * dt; may be below t_end when not divisible
};

SolveResult solve(const ScalarField& phi0, const SolverConfig& config, double t_end);

// Free-space Gaussian kernel (1/(4 pi D t))^(d/2) exp(-|x|^2 / (4 D t)).
double analytic_gaussian(double offset_norm, double t, double d_coeff, int dim);

// psi = phi * rho, renormalized to total mass 1.
ScalarField true_density(const ScalarField& phi, const std::vector<double>& rho_at_nodes);

// Samples a density field at every grid node.
std::vector<double> sample_density(const Grid& grid, const PiecewiseDensity1D& rho);
std::vector<double> sample_density(const Grid& grid, const RasterDensity2D& rho);

}  // namespace diffwalk
