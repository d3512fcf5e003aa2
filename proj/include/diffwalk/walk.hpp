#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace diffwalk {

// Ordered set of points in R^n, stored flat (n doubles per point).
class PointSet {
public:
    PointSet(std::vector<double> coords, std::size_t dim);
    static PointSet from_1d(const std::vector<double>& xs);

    std::size_t size() const { return coords_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    const double* point(std::size_t i) const { return coords_.data() + i * dim_; }
    double squared_distance(std::size_t i, std::size_t j) const;

private:
    std::vector<double> coords_;
    std::size_t dim_;
};

// Column-stochastic one-step transition matrix: entry (j, i) is the
// probability of moving from point i to point j.
class TransitionMatrix {
public:
    explicit TransitionMatrix(std::size_t m);

    std::size_t size() const { return m_; }
    double operator()(std::size_t to, std::size_t from) const {
        return data_[to * m_ + from];
    }
    double& at(std::size_t to, std::size_t from) { return data_[to * m_ + from]; }
    const double* data() const { return data_.data(); }

    // throws if any column deviates from stochasticity beyond 1e-12
    void check_column_stochastic() const;

private:
    std::size_t m_;
    std::vector<double> data_;  // row-major, row = destination
};

using StateDistribution = std::vector<double>;

StateDistribution delta_distribution(std::size_t m, std::size_t at);

// Neighbor retention rule for the Gaussian transition matrix.
struct NeighborCount { std::size_t k; };
struct NeighborRadius { double r; };
using NeighborCutoff = std::variant<NeighborCount, NeighborRadius>;

// P(j|i) proportional to exp(-beta * d_ij^2) over retained neighbors
// (self always retained, d_ii = 0).
TransitionMatrix gaussian_transition_matrix(const PointSet& points, double beta,
                                            const std::optional<NeighborCutoff>& cutoff = {});

// Nearest-neighbor chain: interior columns split (1-p0) evenly between the
// two neighbors; edge columns fold the rejected off-grid move into self.
TransitionMatrix chain_transition_matrix(std::size_t m, double p0);

StateDistribution propagate(const TransitionMatrix& P, const StateDistribution& q0,
                            std::size_t steps);

double conditional_probability(const TransitionMatrix& P, std::size_t from,
                               std::size_t to, std::size_t steps);

// L = degree - adjacency for a symmetric 0/1 adjacency matrix (row-major, m x m).
std::vector<double> graph_laplacian(const std::vector<double>& adjacency, std::size_t m);

struct StationaryResult {
    StateDistribution distribution;
    std::size_t iterations;
};

StationaryResult stationary_distribution(const TransitionMatrix& P, double tol,
                                         std::size_t max_iterations = 1000000);

}  // namespace diffwalk
