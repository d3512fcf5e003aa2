#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "diffwalk/walk.hpp"

namespace diffwalk {

// Time-indexed sequence of positions in R^d; positions stored flat,
// dim doubles per sample.
class DiscretePath {
public:
    DiscretePath(std::vector<double> times, std::vector<double> positions, std::size_t dim);

    std::size_t segments() const { return times_.size() - 1; }
    std::size_t dim() const { return dim_; }
    double time(std::size_t k) const { return times_[k]; }
    const double* position(std::size_t k) const { return positions_.data() + k * dim_; }

private:
    std::vector<double> times_;
    std::vector<double> positions_;
    std::size_t dim_;
};

// Constant or spatially varying penalty coefficient beta(x) >= 0.
class BetaField {
public:
    BetaField(double constant);  // NOLINT(google-explicit-constructor)
    explicit BetaField(std::function<double(const double*, std::size_t)> fn);

    double at(const double* x, std::size_t dim) const;

private:
    double constant_ = 0.0;
    std::function<double(const double*, std::size_t)> fn_;
};

// Diagonal Riemannian metric: one positive coefficient function per axis.
class DiagonalMetric {
public:
    explicit DiagonalMetric(std::vector<std::function<double(const double*, std::size_t)>> gii);
    static DiagonalMetric constant(std::vector<double> gii);

    std::size_t dim() const { return gii_.size(); }
    double coefficient(std::size_t axis, const double* x, std::size_t dim) const;

private:
    std::vector<std::function<double(const double*, std::size_t)>> gii_;
};

// S = sum_k beta(midpoint_k) |dx_k|^2 / dt_k.
double path_action_euclidean(const DiscretePath& path, const BetaField& beta);

// S = sum_k sum_i g_ii(midpoint_k) dx_{k,i}^2 / dt_k.
double path_action_metric(const DiscretePath& path, const DiagonalMetric& metric);

double path_probability_unnormalized(const DiscretePath& path, const BetaField& beta);

// Sums the product of one-step probabilities over every length-t state
// sequence from `from` to `to`. Refuses blow-ups past 10^7 paths.
double enumerate_propagator(const TransitionMatrix& P, std::size_t from, std::size_t to,
                            std::size_t steps);

struct Histogram {
    std::vector<double> edges;            // bin_count + 1 ascending edges
    std::vector<std::uint64_t> counts;    // per bin
    std::uint64_t total = 0;              // includes out-of-range samples

    double normalized_density(std::size_t bin) const;
};

struct McPropagatorResult {
    Histogram histogram;
    double endpoint_mean = 0.0;
    double endpoint_variance = 0.0;  // unbiased
    std::size_t samples = 0;
};

// Samples N-step free paths whose increments are Gaussian with variance
// dt/(2 beta) and histograms the endpoints. Deterministic for a fixed seed;
// per-sample RNG streams derive from (seed, sample index).
McPropagatorResult mc_propagator(double beta, double horizon, std::size_t n_steps,
                                 std::size_t n_samples, std::uint64_t seed,
                                 std::size_t bins = 50, double range_sigmas = 5.0);

}  // namespace diffwalk
