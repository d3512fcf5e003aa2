#pragma once

#include <cstddef>
#include <vector>

namespace diffwalk {

// Piecewise-constant data density over a 1D interval. Pieces are delimited
// by strictly ascending breakpoints; an interior breakpoint belongs to the
// piece on its right (x = 0 falls in the dense piece of the two-region setup).
class PiecewiseDensity1D {
public:
    PiecewiseDensity1D(std::vector<double> breakpoints, std::vector<double> values);

    double density_at(double x) const;
    double x_min() const { return breakpoints_.front(); }
    double x_max() const { return breakpoints_.back(); }
    std::size_t piece_count() const { return values_.size(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

// Cell-constant data density on a 2D raster. Cells are squares of side
// cell_size with the origin at (0,0); values are row-major, row 0 at y=0.
class RasterDensity2D {
public:
    RasterDensity2D(std::size_t width, std::size_t height, double cell_size,
                    std::vector<double> values);

    double density_at(double x, double y) const;
    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    double cell_size() const { return cell_size_; }
    const std::vector<double>& values() const { return values_; }
    double value_at_cell(std::size_t col, std::size_t row) const {
        return values_[row * width_ + col];
    }

private:
    std::size_t width_;
    std::size_t height_;
    double cell_size_;
    std::vector<double> values_;
};

// Parameters of the underlying discrete walk: self-transition probability,
// spatial dimension and time per step.
struct WalkParams {
    double p0 = 0.0;
    int dim = 1;
    double delta = 1.0;

    void validate() const;
};

// D(x) = (1 - p0) / (2 d delta rho^(2/d)), units length^2/time.
double diffusion_coefficient(double rho, const WalkParams& params);

// Path-penalty coefficient beta = 1/(4D), units time/length^2.
double beta_from_diffusion(double d_coeff);

// Materialize a point set whose spacing within each piece is 1/rho.
// Piece lengths are snapped to integer multiples of the spacing by rounding;
// breakpoints appear exactly once.
std::vector<double> points_from_piecewise(const PiecewiseDensity1D& field);

}  // namespace diffwalk
