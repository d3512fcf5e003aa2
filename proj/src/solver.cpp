#include "diffwalk/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diffwalk {

void Grid::validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("Grid: dim must be 1 or 2");
    if (nx < 3) throw std::invalid_argument("Grid: need at least 3 nodes per axis");
    if (dim == 2 && ny < 3) throw std::invalid_argument("Grid: need at least 3 nodes per axis");
    if (dim == 1 && ny != 1) throw std::invalid_argument("Grid: 1D grid must have ny == 1");
    if (!(dx > 0.0)) throw std::invalid_argument("Grid: dx must be positive");
}

std::size_t Grid::nearest_node_1d(double x) const {
    const double f = (x - origin_x) / dx;
    const auto i = static_cast<long long>(std::llround(f));
    // ties toward lower index via round-half-even avoidance: llround rounds half
    // away from zero, so nudge exact .5 down
    long long k = i;
    if (std::abs(f - (std::floor(f) + 0.5)) < 1e-12) k = static_cast<long long>(std::floor(f));
    if (k < 0 || static_cast<std::size_t>(k) >= nx) {
        throw std::domain_error("Grid: coordinate outside grid");
    }
    return static_cast<std::size_t>(k);
}

std::size_t Grid::nearest_node_2d(double x, double y) const {
    Grid row_view = *this;
    const std::size_t col = nearest_node_1d(x);
    row_view.origin_x = origin_y;
    row_view.nx = ny;
    const std::size_t row = row_view.nearest_node_1d(y);
    return index(col, row);
}

double ScalarField::total_mass() const {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
}

SolverConfig::SolverConfig(const Grid& grid, std::vector<double> d_field, double dt,
                           Boundary boundary, bool renormalize)
    : grid_(grid), d_field_(std::move(d_field)), dt_(dt), boundary_(boundary),
      renormalize_(renormalize) {
    grid_.validate();
    if (!(dt_ > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
    if (d_field_.size() != grid_.node_count()) {
        throw std::invalid_argument("SolverConfig: D field size does not match grid");
    }
    double d_max = 0.0;
    for (double d : d_field_) {
        if (!(d > 0.0)) throw std::invalid_argument("SolverConfig: D values must be positive");
        d_max = std::max(d_max, d);
    }
    const double factor = d_max * dt_ / (grid_.dx * grid_.dx);
    if (factor > 1.0 / (2.0 * grid_.dim) + 1e-15) {
        throw std::invalid_argument("SolverConfig: unstable scheme, max(D)*dt/dx^2 = " +
                                    std::to_string(factor) + " exceeds 1/(2*dim)");
    }
    lambda_.resize(d_field_.size());
    const double scale = dt_ / (grid_.dx * grid_.dx);
    for (std::size_t i = 0; i < d_field_.size(); ++i) lambda_[i] = d_field_[i] * scale;
}

double stability_limit(double d_max, double dx, int dim) {
    if (!(d_max > 0.0) || !(dx > 0.0) || dim < 1) {
        throw std::invalid_argument("stability_limit: inputs must be positive");
    }
    return dx * dx / (2.0 * dim * d_max);
}

ScalarField impulse_field(const Grid& grid, std::size_t node) {
    grid.validate();
    if (node >= grid.node_count()) throw std::out_of_range("impulse_field: node out of range");
    ScalarField f{grid, std::vector<double>(grid.node_count(), 0.0)};
    f.values[node] = 1.0;
    return f;
}

namespace {

ScalarField step_impl(const ScalarField& phi, const SolverConfig& config, int dim) {
    if (phi.grid.dim != dim || config.grid().dim != dim ||
        phi.values.size() != config.lambda().size()) {
        throw std::invalid_argument("step: field/config dimension mismatch");
    }
    ScalarField out{phi.grid, std::vector<double>(phi.values.size())};
    const auto& k = kernels::active();
    if (dim == 1) {
        k.stencil_1d(phi.values.data(), config.lambda().data(), out.values.data(),
                     phi.grid.nx, config.boundary());
    } else {
        k.stencil_2d(phi.values.data(), config.lambda().data(), out.values.data(),
                     phi.grid.nx, phi.grid.ny, config.boundary());
    }
    if (config.renormalize()) {
        const double mass = out.total_mass();
        if (!(mass > 0.0)) throw std::runtime_error("step: field mass vanished");
        for (double& v : out.values) v /= mass;
    }
    return out;
}

}  // namespace

ScalarField step_1d(const ScalarField& phi, const SolverConfig& config) {
    return step_impl(phi, config, 1);
}

ScalarField step_2d(const ScalarField& phi, const SolverConfig& config) {
    return step_impl(phi, config, 2);
}

SolveResult solve(const ScalarField& phi0, const SolverConfig& config, double t_end) {
    if (t_end < 0.0) throw std::invalid_argument("solve: t_end must be non-negative");
    const auto steps = static_cast<std::size_t>(std::floor(t_end / config.dt() + 1e-9));
    ScalarField cur = phi0;
    for (std::size_t s = 0; s < steps; ++s) {
        cur = config.grid().dim == 1 ? step_1d(cur, config) : step_2d(cur, config);
    }
    return {std::move(cur), steps, static_cast<double>(steps) * config.dt()};
}

double analytic_gaussian(double offset_norm, double t, double d_coeff, int dim) {
    if (!(t > 0.0)) throw std::domain_error("analytic_gaussian: t must be positive");
    if (!(d_coeff > 0.0)) throw std::domain_error("analytic_gaussian: D must be positive");
    const double denom = 4.0 * std::numbers::pi * d_coeff * t;
    return std::pow(1.0 / denom, dim / 2.0) *
           std::exp(-offset_norm * offset_norm / (4.0 * d_coeff * t));
}

ScalarField true_density(const ScalarField& phi, const std::vector<double>& rho_at_nodes) {
    if (rho_at_nodes.size() != phi.values.size()) {
        throw std::invalid_argument("true_density: density grid mismatch");
    }
    ScalarField psi{phi.grid, std::vector<double>(phi.values.size())};
    double mass = 0.0;
    for (std::size_t i = 0; i < psi.values.size(); ++i) {
        psi.values[i] = phi.values[i] * rho_at_nodes[i];
        mass += psi.values[i];
    }
    if (!(mass > 0.0)) throw std::runtime_error("true_density: degenerate all-zero field");
    for (double& v : psi.values) v /= mass;
    return psi;
}

std::vector<double> sample_density(const Grid& grid, const PiecewiseDensity1D& rho) {
    if (grid.dim != 1) throw std::invalid_argument("sample_density: expected 1D grid");
    std::vector<double> out(grid.node_count());
    for (std::size_t i = 0; i < grid.nx; ++i) out[i] = rho.density_at(grid.x_of(i));
    return out;
}

std::vector<double> sample_density(const Grid& grid, const RasterDensity2D& rho) {
    if (grid.dim != 2) throw std::invalid_argument("sample_density: expected 2D grid");
    std::vector<double> out(grid.node_count());
    for (std::size_t r = 0; r < grid.ny; ++r) {
        for (std::size_t c = 0; c < grid.nx; ++c) {
            out[grid.index(c, r)] = rho.density_at(grid.x_of(c), grid.y_of(r));
        }
    }
    return out;
}

}  // namespace diffwalk
