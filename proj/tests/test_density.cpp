#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "diffwalk/density.hpp"

using namespace diffwalk;

TEST_CASE("piecewise lookup is right-closed at interior breakpoints") {
    const PiecewiseDensity1D field({-1.0, 0.0, 1.0}, {100.0, 1000.0});
    CHECK(field.density_at(0.5) == 1000.0);
    CHECK(field.density_at(-0.5) == 100.0);
    CHECK(field.density_at(0.0) == 1000.0);  // interior breakpoint joins the right piece
    CHECK(field.density_at(-1.0) == 100.0);
    CHECK(field.density_at(1.0) == 1000.0);
    CHECK_THROWS_AS((void)field.density_at(1.5), std::domain_error);
    CHECK_THROWS_AS((void)field.density_at(-1.0001), std::domain_error);
}

TEST_CASE("piecewise construction rejects bad input") {
    CHECK_THROWS(PiecewiseDensity1D({0.0, 0.0, 1.0}, {1.0, 2.0}));
    CHECK_THROWS(PiecewiseDensity1D({0.0, 1.0}, {0.0}));
    CHECK_THROWS(PiecewiseDensity1D({0.0, 1.0}, {-1.0}));
    CHECK_THROWS(PiecewiseDensity1D({0.0, 1.0, 2.0}, {1.0}));
}

TEST_CASE("uniform piecewise field returns the single value everywhere") {
    const PiecewiseDensity1D field({0.0, 2.0}, {7.5});
    CHECK(field.density_at(0.0) == 7.5);
    CHECK(field.density_at(1.3) == 7.5);
    CHECK(field.density_at(2.0) == 7.5);
}

TEST_CASE("raster lookup uses row-major cells") {
    const RasterDensity2D field(2, 2, 1.0, {1.0, 2.0, 3.0, 4.0});
    CHECK(field.density_at(1.5, 0.5) == 2.0);
    CHECK(field.density_at(0.5, 0.5) == 1.0);
    CHECK(field.density_at(0.5, 1.5) == 3.0);
    CHECK(field.density_at(2.0, 2.0) == 4.0);  // upper edge clamps to last cell
    CHECK_THROWS_AS((void)field.density_at(2.5, 0.5), std::domain_error);
}

TEST_CASE("diffusion coefficient follows the density power law") {
    const WalkParams p1{0.2, 1, 0.1};
    CHECK(diffusion_coefficient(10.0, p1) == doctest::Approx(0.04).epsilon(1e-12));
    // 1:10 density ratio in 1D gives a 100:1 coefficient ratio
    CHECK(diffusion_coefficient(1.0, p1) / diffusion_coefficient(10.0, p1) ==
          doctest::Approx(100.0).epsilon(1e-12));
    // exponent 2/d = 1 in 2D: quadrupled density quarters the coefficient
    const WalkParams p2{0.2, 2, 0.1};
    CHECK(diffusion_coefficient(4.0, p2) ==
          doctest::Approx(diffusion_coefficient(1.0, p2) / 4.0).epsilon(1e-12));
    CHECK_THROWS(diffusion_coefficient(0.0, p1));
    CHECK_THROWS(diffusion_coefficient(-1.0, p1));
}

TEST_CASE("diffusion coefficient decreases in rho, p0 and d") {
    const WalkParams base{0.2, 1, 0.1};
    const double d0 = diffusion_coefficient(5.0, base);
    CHECK(diffusion_coefficient(6.0, base) < d0);
    CHECK(diffusion_coefficient(5.0, WalkParams{0.3, 1, 0.1}) < d0);
    CHECK(diffusion_coefficient(1.5, WalkParams{0.2, 2, 0.1}) <
          diffusion_coefficient(1.5, base));  // holds where rho^2 outweighs the extra axis
}

TEST_CASE("beta is the reciprocal of four times the coefficient") {
    CHECK(beta_from_diffusion(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(beta_from_diffusion(0.25) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(beta_from_diffusion(0.1) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK_THROWS(beta_from_diffusion(0.0));
    // beta grows with density
    const WalkParams p{0.2, 1, 0.1};
    CHECK(beta_from_diffusion(diffusion_coefficient(2.0, p)) >
          beta_from_diffusion(diffusion_coefficient(1.0, p)));
}

TEST_CASE("point materialization spaces points by reciprocal density") {
    SUBCASE("hand-enumerated two-piece set") {
        const std::vector<double> pts =
            points_from_piecewise(PiecewiseDensity1D({0.0, 1.0, 2.0}, {2.0, 4.0}));
        const std::vector<double> expected = {0.0, 0.5, 1.0, 1.25, 1.5, 1.75, 2.0};
        REQUIRE(pts.size() == expected.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(pts[i] == doctest::Approx(expected[i]).epsilon(1e-12));
        }
    }
    SUBCASE("two-region experiment grid has 1101 points") {
        const std::vector<double> pts =
            points_from_piecewise(PiecewiseDensity1D({-1.0, 0.0, 1.0}, {100.0, 1000.0}));
        CHECK(pts.size() == 1101);
        CHECK(pts.front() == doctest::Approx(-1.0));
        CHECK(pts.back() == doctest::Approx(1.0));
        CHECK(pts[1] - pts[0] == doctest::Approx(0.01).epsilon(1e-9));
        CHECK(pts[1100] - pts[1099] == doctest::Approx(0.001).epsilon(1e-9));
    }
    SUBCASE("uniform density gives a regular grid") {
        const std::vector<double> pts =
            points_from_piecewise(PiecewiseDensity1D({0.0, 1.0}, {10.0}));
        REQUIRE(pts.size() == 11);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            CHECK(pts[i + 1] - pts[i] == doctest::Approx(0.1).epsilon(1e-12));
        }
    }
}
