#include "diffwalk/kernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diffwalk {

std::size_t snap_to_grid(const Grid& grid, double x, double y) {
    return grid.dim == 1 ? grid.nearest_node_1d(x) : grid.nearest_node_2d(x, y);
}

std::vector<double> transition_kernel_row(const KernelSolveSetup& setup, double source_x,
                                          double source_y,
                                          const std::vector<std::size_t>& target_nodes) {
    const SolverConfig config(setup.grid, setup.d_field, setup.dt, setup.boundary,
                              setup.renormalize);
    const std::size_t source = snap_to_grid(setup.grid, source_x, source_y);
    const SolveResult solved = solve(impulse_field(setup.grid, source), config, setup.t);
    const ScalarField psi = true_density(solved.field, setup.rho_field);
    std::vector<double> row(target_nodes.size());
    for (std::size_t j = 0; j < target_nodes.size(); ++j) {
        if (target_nodes[j] >= psi.values.size()) {
            throw std::out_of_range("transition_kernel_row: target node out of range");
        }
        row[j] = psi.values[target_nodes[j]];
    }
    return row;
}

KernelMatrix kernel_matrix(const KernelSolveSetup& setup,
                           const std::vector<std::pair<double, double>>& points) {
    const std::size_t n = points.size();
    if (n == 0) throw std::invalid_argument("kernel_matrix: need at least one point");

    std::vector<std::size_t> nodes(n);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i] = snap_to_grid(setup.grid, points[i].first, points[i].second);
    }

    std::vector<double> raw(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double> row =
            transition_kernel_row(setup, points[i].first, points[i].second, nodes);
        std::copy(row.begin(), row.end(), raw.begin() + static_cast<long>(i * n));
    }

    KernelMatrix K;
    K.n = n;
    K.values.resize(n * n);
    double max_abs = 0.0;
    double max_gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            max_abs = std::max(max_abs, std::abs(raw[i * n + j]));
            max_gap = std::max(max_gap, std::abs(raw[i * n + j] - raw[j * n + i]));
            K.values[i * n + j] = 0.5 * (raw[i * n + j] + raw[j * n + i]);
        }
    }
    K.asymmetry = max_abs > 0.0 ? max_gap / max_abs : 0.0;

    Eigen::Map<const Eigen::MatrixXd> mapped(K.values.data(), static_cast<long>(n),
                                             static_cast<long>(n));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(mapped, Eigen::EigenvaluesOnly);
    K.min_eigenvalue = eig.eigenvalues().minCoeff();
    K.trace = mapped.trace();
    return K;
}

Classification classify(const KernelSolveSetup& setup, const std::vector<LabeledPoint>& labeled,
                        double query_x, double query_y) {
    if (labeled.empty()) throw std::invalid_argument("classify: need labeled points");

    std::vector<std::size_t> nodes(labeled.size());
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        nodes[i] = snap_to_grid(setup.grid, labeled[i].x, labeled[i].y);
    }
    const std::vector<double> similarity = transition_kernel_row(setup, query_x, query_y, nodes);

    Classification out;
    double total = 0.0;
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        out.posterior[labeled[i].label] += similarity[i];
        total += similarity[i];
    }
    if (!(total > 0.0)) {
        throw std::runtime_error("classify: all similarities zero, classification indeterminate");
    }
    double best = -1.0;
    for (auto& [label, mass] : out.posterior) {
        mass /= total;
        if (mass > best) {
            best = mass;
            out.argmax = label;
        }
    }
    return out;
}

}  // namespace diffwalk
