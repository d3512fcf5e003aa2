#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "diffwalk/pgm.hpp"

using namespace diffwalk;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("ascii parser handles comments and whitespace") {
    const std::string text = "P2\n# a comment\n3 2\n255\n0 10 20\n# mid-data comment\n30 40 50\n";
    const PgmImage img = parse_pgm(text);
    CHECK(img.width == 3);
    CHECK(img.height == 2);
    CHECK(img.maxval == 255);
    REQUIRE(img.pixels.size() == 6);
    CHECK(img.pixels[0] == 0);
    CHECK(img.pixels[4] == 40);
    CHECK(img.pixels[5] == 50);
}

TEST_CASE("binary 16-bit round trip preserves every pixel") {
    PgmImage img;
    img.width = 4;
    img.height = 3;
    img.maxval = 65535;
    img.pixels = {0, 1, 255, 256, 65535, 32768, 7, 8, 9, 10, 11, 12};
    TempFile tmp("diffwalk_pgm_roundtrip.pgm");
    write_pgm16(tmp.path, img);
    const PgmImage back = read_pgm(tmp.path);
    CHECK(back.width == img.width);
    CHECK(back.height == img.height);
    CHECK(back.maxval == 65535);
    CHECK(back.pixels == img.pixels);
}

TEST_CASE("malformed headers are rejected") {
    CHECK_THROWS(parse_pgm("P3\n2 2\n255\n0 0 0 0\n"));          // wrong magic
    CHECK_THROWS(parse_pgm("P2\n0 2\n255\n"));                   // zero dimension
    CHECK_THROWS(parse_pgm("P2\n2 2\n70000\n0 0 0 0\n"));        // maxval too large
    CHECK_THROWS(parse_pgm("P2\n2 2\n255\n0 0 0\n"));            // truncated data
    CHECK_THROWS(parse_pgm("P2\n2 2\n255\n0 0 0 300\n"));        // pixel above maxval
}

TEST_CASE("gray-to-density mapping is linear with given endpoints") {
    PgmImage img;
    img.width = 2;
    img.height = 1;
    img.maxval = 255;
    img.pixels = {255, 0};
    const RasterDensity2D raster =
        load_density_raster(img, GrayDensityMapping{0.0, 200.0, 255.0, 1.0}, 1.0);
    // dark = dense: gray 0 maps to 200, gray 255 maps to 1
    CHECK(raster.value_at_cell(0, 0) == doctest::Approx(1.0));
    CHECK(raster.value_at_cell(1, 0) == doctest::Approx(200.0));
    CHECK(raster.value_at_cell(1, 0) / raster.value_at_cell(0, 0) == doctest::Approx(200.0));
}

TEST_CASE("constant mapping gives a uniform raster") {
    PgmImage img;
    img.width = 1;
    img.height = 1;
    img.maxval = 255;
    img.pixels = {128};
    const RasterDensity2D raster =
        load_density_raster(img, GrayDensityMapping{0.0, 1.0, 255.0, 1.0}, 1.0);
    CHECK(raster.value_at_cell(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("mapping endpoint hits the exact endpoint density") {
    PgmImage img;
    img.width = 1;
    img.height = 1;
    img.maxval = 255;
    img.pixels = {0};
    const RasterDensity2D raster =
        load_density_raster(img, GrayDensityMapping{0.0, 5.0, 255.0, 10.0}, 1.0);
    CHECK(raster.value_at_cell(0, 0) == doctest::Approx(5.0));
    CHECK(raster.density_at(0.5, 0.5) == doctest::Approx(5.0));  // lookup round-trips
}

TEST_CASE("non-positive mapped densities are rejected") {
    PgmImage img;
    img.width = 1;
    img.height = 1;
    img.maxval = 255;
    img.pixels = {0};
    CHECK_THROWS(load_density_raster(img, GrayDensityMapping{0.0, 0.0, 255.0, 1.0}, 1.0));
    CHECK_THROWS(load_density_raster(img, GrayDensityMapping{0.0, -2.0, 255.0, 1.0}, 1.0));
}
