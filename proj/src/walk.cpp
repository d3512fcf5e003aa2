#include "diffwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "diffwalk/simd_kernels.hpp"

namespace diffwalk {

PointSet::PointSet(std::vector<double> coords, std::size_t dim)
    : coords_(std::move(coords)), dim_(dim) {
    if (dim_ == 0 || coords_.empty() || coords_.size() % dim_ != 0) {
        throw std::invalid_argument("PointSet: coordinate count must be a positive multiple of dim");
    }
    const std::size_t m = size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (squared_distance(i, j) == 0.0) {
                throw std::invalid_argument("PointSet: duplicate point at indices " +
                                            std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }
}

PointSet PointSet::from_1d(const std::vector<double>& xs) { return PointSet(xs, 1); }

double PointSet::squared_distance(std::size_t i, std::size_t j) const {
    const double* a = point(i);
    const double* b = point(j);
    double acc = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
        const double d = a[k] - b[k];
        acc += d * d;
    }
    return acc;
}

TransitionMatrix::TransitionMatrix(std::size_t m) : m_(m), data_(m * m, 0.0) {
    if (m_ == 0) throw std::invalid_argument("TransitionMatrix: size must be positive");
}

void TransitionMatrix::check_column_stochastic() const {
    for (std::size_t i = 0; i < m_; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < m_; ++j) {
            const double p = (*this)(j, i);
            if (p < 0.0 || p > 1.0) {
                throw std::runtime_error("TransitionMatrix: entry outside [0,1]");
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw std::runtime_error("TransitionMatrix: column " + std::to_string(i) +
                                     " sums to " + std::to_string(sum));
        }
    }
}

StateDistribution delta_distribution(std::size_t m, std::size_t at) {
    if (at >= m) throw std::out_of_range("delta_distribution: index out of range");
    StateDistribution q(m, 0.0);
    q[at] = 1.0;
    return q;
}

TransitionMatrix gaussian_transition_matrix(const PointSet& points, double beta,
                                            const std::optional<NeighborCutoff>& cutoff) {
    if (beta < 0.0) throw std::invalid_argument("gaussian_transition_matrix: beta must be >= 0");
    const std::size_t m = points.size();
    TransitionMatrix P(m);

    std::vector<double> d2(m);
    std::vector<char> keep(m);
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) d2[j] = points.squared_distance(i, j);

        std::fill(keep.begin(), keep.end(), 1);
        if (cutoff) {
            if (const auto* count = std::get_if<NeighborCount>(&*cutoff)) {
                std::fill(keep.begin(), keep.end(), 0);
                std::iota(order.begin(), order.end(), std::size_t{0});
                const std::size_t k = std::min(count->k, m);
                std::partial_sort(order.begin(), order.begin() + static_cast<long>(k), order.end(),
                                  [&](std::size_t a, std::size_t b) { return d2[a] < d2[b]; });
                for (std::size_t r = 0; r < k; ++r) keep[order[r]] = 1;
            } else {
                const double r = std::get<NeighborRadius>(*cutoff).r;
                for (std::size_t j = 0; j < m; ++j) keep[j] = d2[j] <= r * r ? 1 : 0;
            }
        }

        double z = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (keep[j]) z += std::exp(-beta * d2[j]);
        }
        if (!(z > 0.0)) {
            throw std::runtime_error("gaussian_transition_matrix: cutoff isolates point " +
                                     std::to_string(i));
        }
        for (std::size_t j = 0; j < m; ++j) {
            P.at(j, i) = keep[j] ? std::exp(-beta * d2[j]) / z : 0.0;
        }
    }
    return P;
}

TransitionMatrix chain_transition_matrix(std::size_t m, double p0) {
    if (m < 2) throw std::domain_error("chain_transition_matrix: need at least 2 points");
    if (!(p0 >= 0.0) || p0 >= 1.0) {
        throw std::invalid_argument("chain_transition_matrix: p0 must be in [0,1)");
    }
    const double half = (1.0 - p0) / 2.0;
    TransitionMatrix P(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (i == 0) {
            P.at(0, 0) = p0 + half;  // rejected off-grid move stays
            P.at(1, 0) = half;
        } else if (i + 1 == m) {
            P.at(m - 1, m - 1) = p0 + half;
            P.at(m - 2, m - 1) = half;
        } else {
            P.at(i, i) = p0;
            P.at(i - 1, i) = half;
            P.at(i + 1, i) = half;
        }
    }
    return P;
}

StateDistribution propagate(const TransitionMatrix& P, const StateDistribution& q0,
                            std::size_t steps) {
    if (q0.size() != P.size()) throw std::invalid_argument("propagate: dimension mismatch");
    StateDistribution cur = q0;
    StateDistribution next(cur.size());
    const auto& k = kernels::active();
    for (std::size_t s = 0; s < steps; ++s) {
        k.matvec(P.data(), cur.data(), next.data(), P.size());
        cur.swap(next);
    }
    return cur;
}

double conditional_probability(const TransitionMatrix& P, std::size_t from,
                               std::size_t to, std::size_t steps) {
    if (from >= P.size() || to >= P.size()) {
        throw std::out_of_range("conditional_probability: index out of range");
    }
    return propagate(P, delta_distribution(P.size(), from), steps)[to];
}

std::vector<double> graph_laplacian(const std::vector<double>& adjacency, std::size_t m) {
    if (adjacency.size() != m * m) throw std::invalid_argument("graph_laplacian: size mismatch");
    for (std::size_t i = 0; i < m; ++i) {
        if (adjacency[i * m + i] != 0.0) {
            throw std::invalid_argument("graph_laplacian: adjacency diagonal must be zero");
        }
        for (std::size_t j = i + 1; j < m; ++j) {
            if (adjacency[i * m + j] != adjacency[j * m + i]) {
                throw std::invalid_argument("graph_laplacian: adjacency must be symmetric");
            }
        }
    }
    std::vector<double> L(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double degree = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (adjacency[i * m + j] != 0.0) {
                degree += 1.0;
                L[i * m + j] = -1.0;
            }
        }
        L[i * m + i] = degree;
    }
    return L;
}

StationaryResult stationary_distribution(const TransitionMatrix& P, double tol,
                                         std::size_t max_iterations) {
    const std::size_t m = P.size();
    StateDistribution pi(m, 1.0 / static_cast<double>(m));
    StateDistribution next(m);
    const auto& k = kernels::active();
    for (std::size_t it = 1; it <= max_iterations; ++it) {
        k.matvec(P.data(), pi.data(), next.data(), m);
        double diff = 0.0;
        for (std::size_t j = 0; j < m; ++j) diff = std::max(diff, std::abs(next[j] - pi[j]));
        pi.swap(next);
        if (diff <= tol) return {pi, it};
    }
    throw std::runtime_error("stationary_distribution: no convergence within iteration cap");
}

}  // namespace diffwalk
