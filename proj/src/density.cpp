#include "diffwalk/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diffwalk {

namespace {

void check_positive_finite(const std::vector<double>& values, const char* what) {
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string(what) +
                                        ": densities must be positive and finite");
        }
    }
}

}  // namespace

PiecewiseDensity1D::PiecewiseDensity1D(std::vector<double> breakpoints,
                                       std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() < 2 || values_.size() + 1 != breakpoints_.size()) {
        throw std::invalid_argument("PiecewiseDensity1D: need m+1 breakpoints for m pieces");
    }
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] > breakpoints_[i - 1])) {
            throw std::invalid_argument("PiecewiseDensity1D: breakpoints must be strictly ascending");
        }
    }
    check_positive_finite(values_, "PiecewiseDensity1D");
}

double PiecewiseDensity1D::density_at(double x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back()) {
        throw std::domain_error("PiecewiseDensity1D: x outside domain");
    }
    // interior breakpoints resolve to the right piece
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
    if (idx == 0) idx = 1;                       // x == front
    if (idx > values_.size()) idx = values_.size();  // x == back
    return values_[idx - 1];
}

RasterDensity2D::RasterDensity2D(std::size_t width, std::size_t height,
                                 double cell_size, std::vector<double> values)
    : width_(width), height_(height), cell_size_(cell_size), values_(std::move(values)) {
    if (width_ == 0 || height_ == 0) {
        throw std::invalid_argument("RasterDensity2D: zero dimensions");
    }
    if (values_.size() != width_ * height_) {
        throw std::invalid_argument("RasterDensity2D: values length != width*height");
    }
    if (!(cell_size_ > 0.0)) {
        throw std::invalid_argument("RasterDensity2D: cell_size must be positive");
    }
    check_positive_finite(values_, "RasterDensity2D");
}

double RasterDensity2D::density_at(double x, double y) const {
    const double wx = static_cast<double>(width_) * cell_size_;
    const double wy = static_cast<double>(height_) * cell_size_;
    if (x < 0.0 || y < 0.0 || x > wx || y > wy) {
        throw std::domain_error("RasterDensity2D: point outside domain");
    }
    auto cell = [this](double coord, std::size_t count) {
        auto i = static_cast<std::size_t>(coord / cell_size_);
        return std::min(i, count - 1);  // upper domain edge maps to the last cell
    };
    return values_[cell(y, height_) * width_ + cell(x, width_)];
}

void WalkParams::validate() const {
    if (!(p0 >= 0.0) || p0 >= 1.0) throw std::invalid_argument("WalkParams: p0 must be in [0,1)");
    if (dim != 1 && dim != 2) throw std::invalid_argument("WalkParams: dim must be 1 or 2");
    if (!(delta > 0.0)) throw std::invalid_argument("WalkParams: delta must be positive");
}

double diffusion_coefficient(double rho, const WalkParams& params) {
    params.validate();
    if (!(rho > 0.0)) throw std::domain_error("diffusion_coefficient: rho must be positive");
    const double d = static_cast<double>(params.dim);
    return (1.0 - params.p0) / (2.0 * d * params.delta * std::pow(rho, 2.0 / d));
}

double beta_from_diffusion(double d_coeff) {
    if (!(d_coeff > 0.0)) throw std::domain_error("beta_from_diffusion: D must be positive");
    return 1.0 / (4.0 * d_coeff);
}

std::vector<double> points_from_piecewise(const PiecewiseDensity1D& field) {
    std::vector<double> points;
    const auto& bp = field.breakpoints();
    const auto& rho = field.values();
    for (std::size_t p = 0; p < rho.size(); ++p) {
        const double len = bp[p + 1] - bp[p];
        auto n = static_cast<std::size_t>(std::llround(len * rho[p]));
        if (n == 0) n = 1;
        const double spacing = len / static_cast<double>(n);
        for (std::size_t k = 0; k < n; ++k) {
            points.push_back(bp[p] + spacing * static_cast<double>(k));
        }
    }
    points.push_back(bp.back());
    return points;
}

}  // namespace diffwalk
