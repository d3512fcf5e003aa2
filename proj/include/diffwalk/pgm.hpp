#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "diffwalk/density.hpp"

namespace diffwalk {

struct PgmImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::uint16_t maxval = 255;
    std::vector<std::uint16_t> pixels;  // row-major
};

// Reads P2 (ASCII) or P5 (binary) PGM, maxval up to 65535.
PgmImage read_pgm(const std::filesystem::path& file);
PgmImage parse_pgm(const std::string& bytes);

// Writes 16-bit binary (P5) PGM.
void write_pgm16(const std::filesystem::path& file, const PgmImage& image);

// Linear gray -> density mapping with user-specified endpoints.
struct GrayDensityMapping {
    double gray_low = 0.0;
    double rho_low = 1.0;
    double gray_high = 255.0;
    double rho_high = 1.0;
};

RasterDensity2D load_density_raster(const PgmImage& image, const GrayDensityMapping& mapping,
                                    double cell_size = 1.0);

}  // namespace diffwalk
