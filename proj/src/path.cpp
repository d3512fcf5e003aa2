#include "diffwalk/path.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace diffwalk {

DiscretePath::DiscretePath(std::vector<double> times, std::vector<double> positions,
                           std::size_t dim)
    : times_(std::move(times)), positions_(std::move(positions)), dim_(dim) {
    if (dim_ == 0) throw std::invalid_argument("DiscretePath: dim must be positive");
    if (times_.size() < 2) throw std::invalid_argument("DiscretePath: need at least one segment");
    if (positions_.size() != times_.size() * dim_) {
        throw std::invalid_argument("DiscretePath: times/positions length mismatch");
    }
    for (std::size_t k = 1; k < times_.size(); ++k) {
        if (!(times_[k] > times_[k - 1])) {
            throw std::invalid_argument("DiscretePath: times must be strictly ascending");
        }
    }
}

BetaField::BetaField(double constant) : constant_(constant) {
    if (!(constant >= 0.0)) throw std::invalid_argument("BetaField: beta must be >= 0");
}

BetaField::BetaField(std::function<double(const double*, std::size_t)> fn)
    : fn_(std::move(fn)) {}

double BetaField::at(const double* x, std::size_t dim) const {
    const double b = fn_ ? fn_(x, dim) : constant_;
    if (!(b >= 0.0)) throw std::domain_error("BetaField: negative beta encountered");
    return b;
}

DiagonalMetric::DiagonalMetric(
    std::vector<std::function<double(const double*, std::size_t)>> gii)
    : gii_(std::move(gii)) {
    if (gii_.empty()) throw std::invalid_argument("DiagonalMetric: need at least one axis");
}

DiagonalMetric DiagonalMetric::constant(std::vector<double> gii) {
    std::vector<std::function<double(const double*, std::size_t)>> fns;
    fns.reserve(gii.size());
    for (double g : gii) {
        fns.emplace_back([g](const double*, std::size_t) { return g; });
    }
    return DiagonalMetric(std::move(fns));
}

double DiagonalMetric::coefficient(std::size_t axis, const double* x, std::size_t dim) const {
    const double g = gii_[axis](x, dim);
    if (!(g > 0.0)) throw std::domain_error("DiagonalMetric: non-positive coefficient");
    return g;
}

namespace {

// midpoint quadrature over segments; returns per-axis squared displacement
template <typename PerSegment>
double accumulate_action(const DiscretePath& path, PerSegment&& term) {
    const std::size_t d = path.dim();
    std::vector<double> mid(d);
    double action = 0.0;
    for (std::size_t k = 0; k < path.segments(); ++k) {
        const double* a = path.position(k);
        const double* b = path.position(k + 1);
        const double dt = path.time(k + 1) - path.time(k);
        for (std::size_t i = 0; i < d; ++i) mid[i] = 0.5 * (a[i] + b[i]);
        action += term(a, b, mid.data(), dt);
    }
    return action;
}

}  // namespace

double path_action_euclidean(const DiscretePath& path, const BetaField& beta) {
    const std::size_t d = path.dim();
    return accumulate_action(path, [&](const double* a, const double* b, const double* mid,
                                       double dt) {
        double disp2 = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double dx = b[i] - a[i];
            disp2 += dx * dx;
        }
        return beta.at(mid, d) * disp2 / dt;
    });
}

double path_action_metric(const DiscretePath& path, const DiagonalMetric& metric) {
    if (metric.dim() != path.dim()) {
        throw std::invalid_argument("path_action_metric: path/metric dimension mismatch");
    }
    const std::size_t d = path.dim();
    return accumulate_action(path, [&](const double* a, const double* b, const double* mid,
                                       double dt) {
        double term = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            const double dx = b[i] - a[i];
            term += metric.coefficient(i, mid, d) * dx * dx;
        }
        return term / dt;
    });
}

double path_probability_unnormalized(const DiscretePath& path, const BetaField& beta) {
    return std::exp(-path_action_euclidean(path, beta));
}

double enumerate_propagator(const TransitionMatrix& P, std::size_t from, std::size_t to,
                            std::size_t steps) {
    const std::size_t m = P.size();
    if (from >= m || to >= m) throw std::out_of_range("enumerate_propagator: index out of range");
    double path_count = 1.0;
    for (std::size_t s = 0; s < steps; ++s) {
        path_count *= static_cast<double>(m);
        if (path_count > 1e7) {
            throw std::runtime_error("enumerate_propagator: m^t exceeds enumeration bound");
        }
    }
    if (steps == 0) return from == to ? 1.0 : 0.0;

    // depth-first over state sequences, multiplying edge probabilities
    double total = 0.0;
    auto visit = [&](auto&& self, std::size_t current, std::size_t remaining,
                     double prob) -> void {
        if (remaining == 1) {
            total += prob * P(to, current);
            return;
        }
        for (std::size_t next = 0; next < m; ++next) {
            const double p = prob * P(next, current);
            if (p != 0.0) self(self, next, remaining - 1, p);
        }
    };
    visit(visit, from, steps, 1.0);
    return total;
}

double Histogram::normalized_density(std::size_t bin) const {
    const double width = edges[bin + 1] - edges[bin];
    return static_cast<double>(counts[bin]) / (static_cast<double>(total) * width);
}

McPropagatorResult mc_propagator(double beta, double horizon, std::size_t n_steps,
                                 std::size_t n_samples, std::uint64_t seed,
                                 std::size_t bins, double range_sigmas) {
    if (!(beta > 0.0)) throw std::invalid_argument("mc_propagator: beta must be positive");
    if (!(horizon > 0.0)) throw std::invalid_argument("mc_propagator: horizon must be positive");
    if (n_steps < 1) throw std::invalid_argument("mc_propagator: need at least one step");
    if (n_samples < 1000) throw std::invalid_argument("mc_propagator: need at least 10^3 samples");
    if (bins < 1) throw std::invalid_argument("mc_propagator: need at least one bin");

    const double dt = horizon / static_cast<double>(n_steps);
    const double increment_sigma = std::sqrt(dt / (2.0 * beta));
    const double endpoint_sigma = std::sqrt(horizon / (2.0 * beta));

    McPropagatorResult result;
    result.samples = n_samples;
    result.histogram.edges.resize(bins + 1);
    result.histogram.counts.assign(bins, 0);
    const double lo = -range_sigmas * endpoint_sigma;
    const double hi = range_sigmas * endpoint_sigma;
    for (std::size_t b = 0; b <= bins; ++b) {
        result.histogram.edges[b] =
            lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
    }

    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        // independent stream per sample: mt19937_64 seeded by (seed, index)
        std::seed_seq seq{seed, static_cast<std::uint64_t>(s)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> step(0.0, increment_sigma);
        double x = 0.0;
        for (std::size_t k = 0; k < n_steps; ++k) x += step(rng);

        const double delta = x - mean;
        mean += delta / static_cast<double>(s + 1);
        m2 += delta * (x - mean);

        if (x >= lo && x < hi) {
            auto b = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
            if (b >= bins) b = bins - 1;
            ++result.histogram.counts[b];
        }
        ++result.histogram.total;
    }
    result.endpoint_mean = mean;
    result.endpoint_variance = m2 / static_cast<double>(n_samples - 1);
    return result;
}

}  // namespace diffwalk
