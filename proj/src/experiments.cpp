#include "diffwalk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diffwalk/density.hpp"
#include "diffwalk/kernel.hpp"
#include "diffwalk/path.hpp"
#include "diffwalk/pgm.hpp"
#include "diffwalk/solver.hpp"
#include "diffwalk/spiral.hpp"
#include "diffwalk/walk.hpp"

namespace diffwalk {

namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + file.string());
}

void write_resolved_config(const Config& config, const fs::path& out_dir,
                           const std::string& prefix) {
    fs::create_directories(out_dir);
    write_text(out_dir / (prefix + "_config.txt"), config.resolved_text());
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

Boundary parse_boundary(const Config& config, const std::string& key,
                        const std::string& fallback) {
    const std::string v = config.get_string(key, fallback);
    if (v == "reflecting") return Boundary::Reflecting;
    if (v == "absorbing") return Boundary::AbsorbingZero;
    throw ConfigError(key, "expected 'reflecting' or 'absorbing', got '" + v + "'");
}

std::uint64_t fnv1a(const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

// ---------------------------------------------------------------- fig 2 / 3

struct FigCurves {
    std::vector<double> disc_x, disc_y;  // native irregular grid, peak-normalized
    std::vector<double> cont_x, cont_y;  // regular grid, peak-normalized
    std::vector<double> disc_resampled;  // disc_y on cont_x, linear interpolation
    std::size_t cont_steps = 0;
    double cont_time = 0.0;
    double disc_mass_left = 0.0, disc_mass_right = 0.0;
    double cont_mass_left = 0.0, cont_mass_right = 0.0;
};

std::vector<double> peak_normalize(const std::vector<double>& v) {
    const double peak = *std::max_element(v.begin(), v.end());
    if (peak <= 0.0) throw std::runtime_error("degenerate field: non-positive peak");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / peak;
    return out;
}

std::vector<double> linear_resample(const std::vector<double>& xs,
                                    const std::vector<double>& ys,
                                    const std::vector<double>& targets) {
    std::vector<double> out(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const double x = targets[i];
        if (x <= xs.front()) {
            out[i] = ys.front();
            continue;
        }
        if (x >= xs.back()) {
            out[i] = ys.back();
            continue;
        }
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const auto k = static_cast<std::size_t>(it - xs.begin());
        const double w = (x - xs[k - 1]) / (xs[k] - xs[k - 1]);
        out[i] = ys[k - 1] + w * (ys[k] - ys[k - 1]);
    }
    return out;
}

FigCurves run_fig_pair(const Config& config, double default_impulse_x) {
    const double p0 = config.get_double("p0", 0.2);
    const double delta = config.get_double("delta", 0.1);
    const double x_min = config.get_double("x_min", -1.0);
    const double x_mid = config.get_double("x_mid", 0.0);
    const double x_max = config.get_double("x_max", 1.0);
    const double rho_left = config.get_double("rho_left", 100.0);
    const double rho_right = config.get_double("rho_right", 1000.0);
    const double d_left = config.get_double("d_left", 5e-7);
    const double d_right = config.get_double("d_right", 5e-9);
    const double dx = config.get_double("dx", 0.001);
    const double dt = config.get_double("dt", 0.1);
    const auto n_disc = static_cast<std::size_t>(config.get_int("discrete_steps", 2000));
    const double impulse_x = config.get_double("impulse_x", default_impulse_x);
    const bool renorm = config.get_bool("renormalize", true);
    const Boundary boundary = parse_boundary(config, "boundary", "reflecting");
    if (n_disc == 0) throw ConfigError("discrete_steps", "must be >= 1");

    FigCurves out;

    // discrete chain on the density-spaced irregular grid
    const PiecewiseDensity1D rho({x_min, x_mid, x_max}, {rho_left, rho_right});
    out.disc_x = points_from_piecewise(rho);
    const std::size_t m = out.disc_x.size();
    const TransitionMatrix P = chain_transition_matrix(m, p0);
    std::size_t src = 0;
    for (std::size_t i = 1; i < m; ++i) {
        if (std::abs(out.disc_x[i] - impulse_x) < std::abs(out.disc_x[src] - impulse_x)) src = i;
    }
    const StateDistribution q = propagate(P, delta_distribution(m, src), n_disc);
    for (std::size_t i = 0; i < m; ++i) {
        if (out.disc_x[i] < x_mid) out.disc_mass_left += q[i];
        if (out.disc_x[i] > x_mid) out.disc_mass_right += q[i];
    }
    out.disc_y = peak_normalize(q);

    // continuous solve; stop time from the step-time correspondence: the walk
    // on the left grid realizes D = (1-p0) a^2 / (2 delta), so N steps of the
    // chain correspond to N * delta * (D_walk / d_left) solver time.
    const double a_left = 1.0 / rho_left;
    const double d_walk = (1.0 - p0) * a_left * a_left / (2.0 * delta);
    const double t_cont =
        config.get_double("t_continuous", static_cast<double>(n_disc) * delta * d_walk / d_left);

    Grid grid;
    grid.dim = 1;
    grid.nx = static_cast<std::size_t>(std::llround((x_max - x_min) / dx)) + 1;
    grid.dx = dx;
    grid.origin_x = x_min;
    grid.validate();
    std::vector<double> d_field(grid.nx);
    for (std::size_t i = 0; i < grid.nx; ++i) {
        d_field[i] = grid.x_of(i) < x_mid ? d_left : d_right;
    }
    const SolverConfig solver(grid, d_field, dt, boundary, renorm);
    const SolveResult solved = solve(impulse_field(grid, grid.nearest_node_1d(impulse_x)),
                                     solver, t_cont);
    out.cont_steps = solved.steps;
    out.cont_time = solved.simulated_time;
    out.cont_x.resize(grid.nx);
    for (std::size_t i = 0; i < grid.nx; ++i) out.cont_x[i] = grid.x_of(i);
    for (std::size_t i = 0; i < grid.nx; ++i) {
        if (out.cont_x[i] < x_mid) out.cont_mass_left += solved.field.values[i];
        if (out.cont_x[i] > x_mid) out.cont_mass_right += solved.field.values[i];
    }
    out.cont_y = peak_normalize(solved.field.values);
    out.disc_resampled = linear_resample(out.disc_x, out.disc_y, out.cont_x);
    return out;
}

void write_curve_csv(const fs::path& file, const std::vector<double>& xs,
                     const std::vector<double>& ys) {
    std::ostringstream s;
    s << "x,phi_peak_normalized\n" << std::setprecision(12);
    for (std::size_t i = 0; i < xs.size(); ++i) s << xs[i] << ',' << ys[i] << '\n';
    write_text(file, s.str());
}

double max_abs_discrepancy(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// distance from `source` to the first x where y drops below `level`, per side
std::pair<double, double> crossing_distances(const std::vector<double>& xs,
                                             const std::vector<double>& ys, double source,
                                             double level) {
    double left = std::numeric_limits<double>::infinity();
    double right = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] >= level) continue;
        if (xs[i] < source) left = std::min(left, source - xs[i]);
        if (xs[i] > source) right = std::min(right, xs[i] - source);
    }
    return {left, right};
}

// jump in first differences across the interface at x=0, relative to the
// larger of the per-side neighborhood medians of |slope change|
double interface_jump_statistic(const std::vector<double>& xs, const std::vector<double>& ys,
                                std::size_t window = 20) {
    const std::size_t n = xs.size();
    std::vector<double> slope(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) slope[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    const auto i0 = static_cast<std::size_t>(
        std::lower_bound(xs.begin(), xs.end(), 0.0) - xs.begin());
    if (i0 == 0 || i0 + 1 >= n) throw std::runtime_error("interface outside curve domain");
    const double jump = std::abs(slope[i0] - slope[i0 - 1]);
    std::vector<double> ds(slope.size() - 1);
    for (std::size_t i = 0; i + 1 < slope.size(); ++i) ds[i] = std::abs(slope[i + 1] - slope[i]);
    auto median_of = [](std::vector<double> v) {
        if (v.empty()) throw std::runtime_error("interface window empty");
        std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2),
                         v.end());
        return v[v.size() / 2];
    };
    const std::size_t lo = i0 >= 1 + window ? i0 - 1 - window : 0;
    const std::vector<double> left(ds.begin() + static_cast<std::ptrdiff_t>(lo),
                                   ds.begin() + static_cast<std::ptrdiff_t>(i0 - 1));
    const std::size_t hi = std::min(i0 + window, ds.size());
    const std::vector<double> right(ds.begin() + static_cast<std::ptrdiff_t>(i0),
                                    ds.begin() + static_cast<std::ptrdiff_t>(hi));
    const double med = std::max(median_of(left), median_of(right));
    if (med <= 0.0) throw std::runtime_error("degenerate interface neighborhood");
    return jump / med;
}

int run_fig(const Config& config, const fs::path& out_dir, const std::string& prefix,
            double default_impulse_x, bool with_interface_stats) {
    write_resolved_config(config, out_dir, prefix);
    const FigCurves c = run_fig_pair(config, default_impulse_x);
    write_curve_csv(out_dir / (prefix + "_discrete.csv"), c.cont_x, c.disc_resampled);
    write_curve_csv(out_dir / (prefix + "_continuous.csv"), c.cont_x, c.cont_y);

    const double impulse_x = config.get_double("impulse_x", default_impulse_x);
    const auto [l10, r10] = crossing_distances(c.cont_x, c.cont_y, impulse_x, 0.1);
    const auto [l50, r50] = crossing_distances(c.cont_x, c.cont_y, impulse_x, 0.5);
    std::ostringstream s;
    s << prefix << " report\n"
      << "continuous_steps = " << c.cont_steps << "\n"
      << "continuous_time = " << fmt(c.cont_time) << "\n"
      << "max_abs_discrepancy = " << fmt(max_abs_discrepancy(c.disc_resampled, c.cont_y)) << "\n"
      << "spread_left_at_0.5 = " << fmt(l50) << "\n"
      << "spread_right_at_0.5 = " << fmt(r50) << "\n"
      << "spread_left_at_0.1 = " << fmt(l10) << "\n"
      << "spread_right_at_0.1 = " << fmt(r10) << "\n"
      << "spread_ratio_at_0.1 = " << fmt(l10 / r10) << "\n";
    if (with_interface_stats) {
        s << "discrete_jump_statistic = "
          << fmt(interface_jump_statistic(c.disc_x, c.disc_y)) << "\n"
          << "continuous_jump_statistic = "
          << fmt(interface_jump_statistic(c.cont_x, c.cont_y)) << "\n"
          << "discrete_mass_left = " << fmt(c.disc_mass_left) << "\n"
          << "discrete_mass_right = " << fmt(c.disc_mass_right) << "\n"
          << "continuous_mass_left = " << fmt(c.cont_mass_left) << "\n"
          << "continuous_mass_right = " << fmt(c.cont_mass_right) << "\n";
    }
    write_text(out_dir / (prefix + "_report.txt"), s.str());
    return 0;
}

// ---------------------------------------------------------------- swissroll

struct SwissSetup {
    SpiralRaster raster;
    Grid grid;
    std::vector<double> d_field;
    std::vector<double> rho_field;
    double dt;
    Boundary boundary;
    bool renormalize;
};

SwissSetup swiss_setup(const Config& config) {
    SpiralParams p;
    p.scale = static_cast<std::size_t>(config.get_int("scale", 1));
    p.cell_size = config.get_double("cell_size", 0.1);
    p.inner_radius = config.get_double("inner_radius", 6.0);
    p.growth = config.get_double("growth", 5.0);
    p.turns = config.get_double("turns", 1.1);
    p.arm_width = config.get_double("arm_width", 5.0);
    p.rho_high = config.get_double("rho_high", 200.0);
    p.rho_low = config.get_double("rho_low", 1.0);
    if (p.scale == 0) throw ConfigError("scale", "must be >= 1");

    SwissSetup s{generate_spiral(p), Grid{}, {}, {}, config.get_double("dt", 0.1),
                 parse_boundary(config, "boundary", "absorbing"),
                 config.get_bool("renormalize", true)};
    s.grid.dim = 2;
    s.grid.nx = s.raster.width;
    s.grid.ny = s.raster.height;
    s.grid.dx = s.raster.density.cell_size();
    s.grid.validate();

    const double d_arm = config.get_double("d_arm", 1.5e-5);
    const double d_background = config.get_double("d_background", 3e-3);
    const std::size_t n = s.grid.node_count();
    s.d_field.resize(n);
    s.rho_field.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool on_arm = s.raster.arm_id[i] >= 0;
        s.d_field[i] = on_arm ? d_arm : d_background;
        s.rho_field[i] = s.raster.density.values()[i];
    }
    return s;
}

void write_field_snapshot(const fs::path& out_dir, const std::string& stem,
                          const Grid& grid, const std::vector<double>& values) {
    const double peak = *std::max_element(values.begin(), values.end());
    if (peak <= 0.0) throw std::runtime_error("degenerate field: non-positive peak");
    PgmImage img;
    img.width = grid.nx;
    img.height = grid.ny;
    img.maxval = 65535;
    img.pixels.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        img.pixels[i] = static_cast<std::uint16_t>(std::llround(values[i] / peak * 65535.0));
    }
    write_pgm16(out_dir / (stem + ".pgm"), img);
    write_text(out_dir / (stem + ".scale.txt"),
               "value = gray / 65535 * value_max\nvalue_max = " + fmt(peak) + "\n");
    std::ostringstream csv;
    csv << "row,col,value\n" << std::setprecision(12);
    for (std::size_t row = 0; row < grid.ny; ++row) {
        for (std::size_t col = 0; col < grid.nx; ++col) {
            csv << row << ',' << col << ',' << values[grid.index(col, row)] << '\n';
        }
    }
    write_text(out_dir / (stem + ".csv"), csv.str());
}

struct ArmStats {
    double mean_ratio = 0.0;        // mean psi on arms / mean psi on background
    double background_max = 0.0;
    double source_arm_median = 0.0;
};

ArmStats arm_statistics(const SpiralRaster& raster, const std::vector<double>& psi) {
    ArmStats s;
    double hi_sum = 0.0, bg_sum = 0.0;
    std::size_t hi_n = 0, bg_n = 0;
    std::vector<double> src_arm;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (raster.arm_id[i] >= 0) {
            hi_sum += psi[i];
            ++hi_n;
            if (raster.arm_id[i] == raster.source_arm_index) src_arm.push_back(psi[i]);
        } else {
            bg_sum += psi[i];
            ++bg_n;
            s.background_max = std::max(s.background_max, psi[i]);
        }
    }
    if (hi_n == 0 || bg_n == 0 || src_arm.empty()) {
        throw std::runtime_error("degenerate raster: empty arm or background");
    }
    s.mean_ratio = (hi_sum / static_cast<double>(hi_n)) / (bg_sum / static_cast<double>(bg_n));
    std::nth_element(src_arm.begin(),
                     src_arm.begin() + static_cast<std::ptrdiff_t>(src_arm.size() / 2),
                     src_arm.end());
    s.source_arm_median = src_arm[src_arm.size() / 2];
    return s;
}

// coefficient of variation of the field averaged over 8 angular sectors in an
// annulus around the source; low values mean radial spread
double isotropy_statistic(const Grid& grid, const std::vector<double>& field,
                          std::size_t source, double radius_cells, double band_cells) {
    const auto src_col = static_cast<double>(source % grid.nx);
    const auto src_row = static_cast<double>(source / grid.nx);
    double sum[8] = {};
    std::size_t cnt[8] = {};
    for (std::size_t row = 0; row < grid.ny; ++row) {
        for (std::size_t col = 0; col < grid.nx; ++col) {
            const double dxc = static_cast<double>(col) - src_col;
            const double dyc = static_cast<double>(row) - src_row;
            const double r = std::hypot(dxc, dyc);
            if (std::abs(r - radius_cells) > band_cells) continue;
            const double ang = std::atan2(dyc, dxc) + std::numbers::pi;
            auto sec = static_cast<std::size_t>(ang / (2.0 * std::numbers::pi) * 8.0);
            sec = std::min<std::size_t>(sec, 7);
            sum[sec] += field[grid.index(col, row)];
            ++cnt[sec];
        }
    }
    double mean = 0.0;
    double means[8];
    for (int k = 0; k < 8; ++k) {
        if (cnt[k] == 0) throw std::runtime_error("isotropy annulus misses a sector");
        means[k] = sum[k] / static_cast<double>(cnt[k]);
        mean += means[k] / 8.0;
    }
    double var = 0.0;
    for (const double m : means) var += (m - mean) * (m - mean) / 8.0;
    if (mean <= 0.0) throw std::runtime_error("degenerate field in isotropy annulus");
    return std::sqrt(var) / mean;
}

int run_swissroll_impl(const Config& config, const fs::path& out_dir) {
    write_resolved_config(config, out_dir, "swissroll");
    const SwissSetup s = swiss_setup(config);
    const double t1 = config.get_double("t_snapshot_early", 3333.0);
    const double t2 = config.get_double("t_snapshot_late", 20000.0);
    if (t2 < t1) throw ConfigError("t_snapshot_late", "must be >= t_snapshot_early");
    const double iso_radius = config.get_double("isotropy_radius_cells", 5.0);
    const double iso_band = config.get_double("isotropy_band_cells", 1.5);

    const SolverConfig solver(s.grid, s.d_field, s.dt, s.boundary, s.renormalize);
    const SolveResult early = solve(impulse_field(s.grid, s.raster.source_node), solver, t1);
    const ScalarField psi_early = true_density(early.field, s.rho_field);
    const SolveResult late = solve(early.field, solver, t2 - early.simulated_time);
    const ScalarField psi_late = true_density(late.field, s.rho_field);

    write_field_snapshot(out_dir, "swissroll_t3333", s.grid, psi_early.values);
    write_field_snapshot(out_dir, "swissroll_t20000", s.grid, psi_late.values);

    const ArmStats early_stats = arm_statistics(s.raster, psi_early.values);
    const ArmStats late_stats = arm_statistics(s.raster, psi_late.values);
    // the isotropy claim is about how the impulse *mass* spreads before it
    // feels the arm geometry, so it is evaluated on phi
    const double iso = isotropy_statistic(s.grid, early.field.values, s.raster.source_node,
                                          iso_radius * static_cast<double>(s.raster.width) / 90.0,
                                          iso_band);
    std::ostringstream rep;
    rep << "swissroll report\n"
        << "grid = " << s.grid.nx << "x" << s.grid.ny << "\n"
        << "source_node = " << s.raster.source_node << "\n"
        << "source_col = " << s.raster.source_node % s.grid.nx << "\n"
        << "source_row = " << s.raster.source_node / s.grid.nx << "\n"
        << "steps_early = " << early.steps << "\n"
        << "steps_late = " << early.steps + late.steps << "\n"
        << "mean_psi_ratio_early = " << fmt(early_stats.mean_ratio) << "\n"
        << "mean_psi_ratio_late = " << fmt(late_stats.mean_ratio) << "\n"
        << "background_max_psi_late = " << fmt(late_stats.background_max) << "\n"
        << "source_arm_median_psi_late = " << fmt(late_stats.source_arm_median) << "\n"
        << "background_below_arm_median_late = "
        << (late_stats.background_max < late_stats.source_arm_median ? "yes" : "no") << "\n"
        << "isotropy_cov_early = " << fmt(iso) << "\n"
        << "phi_checksum_late = " << std::hex << std::setw(16) << std::setfill('0')
        << fnv1a(late.field.values.data(), late.field.values.size() * sizeof(double)) << "\n";
    write_text(out_dir / "swissroll_report.txt", rep.str());
    return 0;
}

// ------------------------------------------------------------- verify-paths

int run_verify_impl(const Config& config, const fs::path& out_dir, std::uint64_t seed) {
    write_resolved_config(config, out_dir, "verify_paths");
    std::ostringstream rep;
    rep << "path-integral verification\nseed = " << seed << "\n";
    bool ok = true;

    // (a) summed path probabilities equal matrix powers
    double worst_a = 0.0;
    for (const std::size_t m : {std::size_t{3}, std::size_t{5}}) {
        for (const double p0 : {0.0, 0.2, 0.5}) {
            const TransitionMatrix P = chain_transition_matrix(m, p0);
            for (std::size_t t = 1; t <= 6; ++t) {
                for (std::size_t i = 0; i < m; ++i) {
                    for (std::size_t j = 0; j < m; ++j) {
                        const double d = std::abs(enumerate_propagator(P, i, j, t) -
                                                  conditional_probability(P, i, j, t));
                        worst_a = std::max(worst_a, d);
                    }
                }
            }
        }
    }
    const double tol_a = config.get_double("enumeration_tolerance", 1e-12);
    rep << "[a] path_sum_vs_matrix_power max_discrepancy = " << fmt(worst_a)
        << (worst_a <= tol_a ? "  PASS" : "  FAIL") << "\n";
    ok = ok && worst_a <= tol_a;

    // (b) sampled endpoint law vs the Gaussian solution
    const auto n_steps = static_cast<std::size_t>(config.get_int("mc_steps", 100));
    const auto n_samples = static_cast<std::size_t>(config.get_int("mc_samples", 100000));
    const auto n_seeds = static_cast<std::size_t>(config.get_int("mc_seeds", 3));
    const double z_limit = config.get_double("mc_z_limit", 3.0);
    const double l1_limit = config.get_double("mc_l1_limit", 0.03);
    double worst_z = 0.0, worst_l1 = 0.0;
    for (const double beta : {0.25, 0.5, 1.0}) {
        for (const double horizon : {0.5, 1.0}) {
            for (std::size_t k = 0; k < n_seeds; ++k) {
                const McPropagatorResult r =
                    mc_propagator(beta, horizon, n_steps, n_samples, seed + k);
                const double target = horizon / (2.0 * beta);
                const double se =
                    target * std::sqrt(2.0 / static_cast<double>(n_samples - 1));
                const double z = (r.endpoint_variance - target) / se;
                worst_z = std::max(worst_z, std::abs(z));
                // analytic bin masses of the zero-mean Gaussian with that variance
                const double sigma = std::sqrt(target);
                double l1 = 0.0;
                double covered = 0.0;
                const auto& h = r.histogram;
                for (std::size_t b = 0; b + 1 < h.edges.size(); ++b) {
                    const double lo = h.edges[b] / (sigma * std::numbers::sqrt2);
                    const double hi = h.edges[b + 1] / (sigma * std::numbers::sqrt2);
                    const double mass = 0.5 * (std::erf(hi) - std::erf(lo));
                    const double observed =
                        static_cast<double>(h.counts[b]) / static_cast<double>(h.total);
                    l1 += std::abs(observed - mass);
                    covered += mass;
                }
                l1 += 1.0 - covered;  // out-of-range tail mass
                worst_l1 = std::max(worst_l1, l1);
            }
        }
    }
    rep << "[b] mc_variance worst_abs_z = " << fmt(worst_z)
        << (worst_z <= z_limit ? "  PASS" : "  FAIL") << "\n"
        << "[b] mc_histogram worst_l1 = " << fmt(worst_l1)
        << (worst_l1 <= l1_limit ? "  PASS" : "  FAIL") << "\n";
    ok = ok && worst_z <= z_limit && worst_l1 <= l1_limit;

    // (c) constant-coefficient solve vs the analytic kernel
    const double d_coeff = config.get_double("fd_d", 1.0);
    const double fd_dx = config.get_double("fd_dx", 0.01);
    const double fd_dt = config.get_double("fd_dt", 2e-5);
    const double fd_t = config.get_double("fd_t", 0.01);
    Grid grid;
    grid.dim = 1;
    grid.nx = static_cast<std::size_t>(std::llround(2.0 / fd_dx)) + 1;
    grid.dx = fd_dx;
    grid.origin_x = -1.0;
    grid.validate();
    const SolverConfig solver(grid, std::vector<double>(grid.nx, d_coeff), fd_dt,
                              Boundary::Reflecting, false);
    const std::size_t center = grid.nearest_node_1d(0.0);
    const SolveResult r = solve(impulse_field(grid, center), solver, fd_t);
    std::vector<double> analytic(grid.nx);
    double analytic_mass = 0.0;
    for (std::size_t i = 0; i < grid.nx; ++i) {
        analytic[i] = analytic_gaussian(std::abs(grid.x_of(i)), fd_t, d_coeff, 1) * fd_dx;
        analytic_mass += analytic[i];
    }
    double l1 = 0.0;
    const double fd_mass = r.field.total_mass();
    for (std::size_t i = 0; i < grid.nx; ++i) {
        l1 += std::abs(r.field.values[i] / fd_mass - analytic[i] / analytic_mass);
    }
    const double fd_limit = config.get_double("fd_l1_limit", 1e-3);
    rep << "[c] fd_vs_analytic normalized_l1 = " << fmt(l1)
        << (l1 <= fd_limit ? "  PASS" : "  FAIL") << "\n";
    ok = ok && l1 <= fd_limit;

    rep << "overall = " << (ok ? "PASS" : "FAIL") << "\n";
    write_text(out_dir / "verify_report.txt", rep.str());
    return ok ? 0 : 3;
}

// ----------------------------------------------------------------- classify

void write_kernel_csv(const fs::path& file, const KernelMatrix& k) {
    std::ostringstream s;
    s << "i,j,K\n" << std::setprecision(12);
    for (std::size_t i = 0; i < k.n; ++i) {
        for (std::size_t j = 0; j < k.n; ++j) s << i << ',' << j << ',' << k(i, j) << '\n';
    }
    write_text(file, s.str());
}

int run_classify_uniform(const Config& config, const fs::path& out_dir) {
    const double p0 = config.get_double("p0", 0.2);
    const double delta = config.get_double("delta", 0.1);
    const double rho_value = config.get_double("rho", 10.0);
    const double dx = config.get_double("dx", 0.01);
    const double dt = config.get_double("dt", 1e-3);
    const double t = config.get_double("t", 1.0);
    const double a = config.get_double("label_offset", 0.25);

    WalkParams wp{p0, 1, delta};
    wp.validate();
    KernelSolveSetup setup;
    setup.grid.dim = 1;
    setup.grid.nx = static_cast<std::size_t>(std::llround(2.0 / dx)) + 1;
    setup.grid.dx = dx;
    setup.grid.origin_x = -1.0;
    setup.grid.validate();
    const double d_value = diffusion_coefficient(rho_value, wp);
    setup.d_field.assign(setup.grid.nx, d_value);
    setup.rho_field.assign(setup.grid.nx, rho_value);
    setup.dt = dt;
    setup.t = t;
    setup.boundary = parse_boundary(config, "boundary", "reflecting");
    setup.renormalize = config.get_bool("renormalize", false);

    const std::vector<LabeledPoint> labeled = {{-a, 0.0, "A"}, {a, 0.0, "B"}};
    const std::vector<double> queries = {-a, -a / 2.0, 0.0, a / 2.0, a};

    std::ostringstream csv;
    csv << "query_x,argmax_label,posterior_A,posterior_B\n" << std::setprecision(12);
    for (const double q : queries) {
        const Classification c = classify(setup, labeled, q, 0.0);
        csv << q << ',' << c.argmax << ',' << c.posterior.at("A") << ','
            << c.posterior.at("B") << '\n';
    }
    write_text(out_dir / "classification.csv", csv.str());

    const std::vector<std::pair<double, double>> pts = {{-a, 0.0}, {a, 0.0}};
    write_kernel_csv(out_dir / "kernel.csv", kernel_matrix(setup, pts));
    return 0;
}

int run_classify_spiral(const Config& config, const fs::path& out_dir) {
    const SwissSetup s = swiss_setup(config);
    KernelSolveSetup setup{s.grid, s.d_field, s.rho_field, s.dt,
                           config.get_double("t", 20000.0), s.boundary, s.renormalize};
    const auto labels_per_arm = static_cast<std::size_t>(config.get_int("labels_per_arm", 5));
    const auto queries_per_arm = static_cast<std::size_t>(config.get_int("queries_per_arm", 10));
    const std::string names[2] = {config.get_string("label_0", "A"),
                                  config.get_string("label_1", "B")};

    std::vector<LabeledPoint> labeled;
    for (int arm = 0; arm < 2; ++arm) {
        for (const std::size_t node : s.raster.arm_nodes(arm, labels_per_arm, 0.1, 0.9)) {
            labeled.push_back({s.grid.x_of(node % s.grid.nx), s.grid.y_of(node / s.grid.nx),
                               names[arm]});
        }
    }

    std::ostringstream csv;
    csv << "query_x,query_y,true_label,argmax_label,posterior_" << names[0] << ",posterior_"
        << names[1] << "\n"
        << std::setprecision(12);
    std::size_t correct = 0, total = 0;
    for (int arm = 0; arm < 2; ++arm) {
        for (const std::size_t node : s.raster.arm_nodes(arm, queries_per_arm, 0.1, 0.9)) {
            const double qx = s.grid.x_of(node % s.grid.nx);
            const double qy = s.grid.y_of(node / s.grid.nx);
            const Classification c = classify(setup, labeled, qx, qy);
            csv << qx << ',' << qy << ',' << names[arm] << ',' << c.argmax << ','
                << c.posterior.at(names[0]) << ',' << c.posterior.at(names[1]) << '\n';
            correct += c.argmax == names[arm] ? 1 : 0;
            ++total;
        }
    }
    write_text(out_dir / "classification.csv", csv.str());

    std::vector<std::pair<double, double>> pts;
    for (const auto& lp : labeled) pts.emplace_back(lp.x, lp.y);
    const KernelMatrix k = kernel_matrix(setup, pts);
    write_kernel_csv(out_dir / "kernel.csv", k);

    const double required = config.get_double("required_accuracy", 0.9);
    const double accuracy = static_cast<double>(correct) / static_cast<double>(total);
    std::ostringstream rep;
    rep << "classify report\n"
        << "labeled_points = " << labeled.size() << "\n"
        << "queries = " << total << "\n"
        << "accuracy = " << fmt(accuracy) << "\n"
        << "kernel_asymmetry = " << fmt(k.asymmetry) << "\n"
        << "kernel_min_eigenvalue = " << fmt(k.min_eigenvalue) << "\n"
        << "kernel_trace = " << fmt(k.trace) << "\n";
    write_text(out_dir / "classify_report.txt", rep.str());
    return accuracy >= required ? 0 : 3;
}

}  // namespace

int run_fig2(const Config& config, const std::filesystem::path& out_dir) {
    return run_fig(config, out_dir, "fig2", 0.0, false);
}

int run_fig3(const Config& config, const std::filesystem::path& out_dir) {
    return run_fig(config, out_dir, "fig3", -0.1, true);
}

int run_swissroll(const Config& config, const std::filesystem::path& out_dir) {
    return run_swissroll_impl(config, out_dir);
}

int run_verify_paths(const Config& config, const std::filesystem::path& out_dir,
                     std::uint64_t seed) {
    return run_verify_impl(config, out_dir, seed);
}

int run_classify(const Config& config, const std::filesystem::path& out_dir) {
    write_resolved_config(config, out_dir, "classify");
    const std::string scenario = config.get_string("scenario", "uniform");
    if (scenario == "uniform") return run_classify_uniform(config, out_dir);
    if (scenario == "spiral") return run_classify_spiral(config, out_dir);
    throw ConfigError("scenario", "expected 'uniform' or 'spiral', got '" + scenario + "'");
}

}  // namespace diffwalk
