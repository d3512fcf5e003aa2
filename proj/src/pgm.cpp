#include "diffwalk/pgm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace diffwalk {

namespace {

// Skips whitespace and '#' comment lines between header tokens.
std::size_t next_token(const std::string& s, std::size_t pos, std::string& token) {
    while (pos < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        } else if (s[pos] == '#') {
            while (pos < s.size() && s[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
    const std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    token = s.substr(start, pos - start);
    if (token.empty()) throw std::runtime_error("PGM: truncated header");
    return pos;
}

unsigned long parse_number(const std::string& token) {
    std::size_t used = 0;
    unsigned long v = std::stoul(token, &used);
    if (used != token.size()) throw std::runtime_error("PGM: malformed number '" + token + "'");
    return v;
}

}  // namespace

PgmImage parse_pgm(const std::string& bytes) {
    std::string magic;
    std::size_t pos = next_token(bytes, 0, magic);
    if (magic != "P2" && magic != "P5") {
        throw std::runtime_error("PGM: unsupported magic '" + magic + "'");
    }
    std::string tok;
    pos = next_token(bytes, pos, tok);
    const unsigned long width = parse_number(tok);
    pos = next_token(bytes, pos, tok);
    const unsigned long height = parse_number(tok);
    pos = next_token(bytes, pos, tok);
    const unsigned long maxval = parse_number(tok);
    if (width == 0 || height == 0) throw std::runtime_error("PGM: zero dimensions");
    if (maxval == 0 || maxval > 65535) throw std::runtime_error("PGM: maxval out of range");

    PgmImage img;
    img.width = width;
    img.height = height;
    img.maxval = static_cast<std::uint16_t>(maxval);
    img.pixels.resize(width * height);

    if (magic == "P2") {
        for (auto& px : img.pixels) {
            pos = next_token(bytes, pos, tok);
            const unsigned long v = parse_number(tok);
            if (v > maxval) throw std::runtime_error("PGM: sample exceeds maxval");
            px = static_cast<std::uint16_t>(v);
        }
    } else {
        if (pos >= bytes.size()) throw std::runtime_error("PGM: missing raster");
        ++pos;  // single whitespace byte after maxval
        const bool wide = maxval > 255;
        const std::size_t need = img.pixels.size() * (wide ? 2 : 1);
        if (bytes.size() - pos < need) throw std::runtime_error("PGM: truncated raster");
        for (auto& px : img.pixels) {
            if (wide) {
                // big-endian per the netpbm convention
                px = static_cast<std::uint16_t>(
                    (static_cast<unsigned char>(bytes[pos]) << 8) |
                    static_cast<unsigned char>(bytes[pos + 1]));
                pos += 2;
            } else {
                px = static_cast<unsigned char>(bytes[pos++]);
            }
            if (px > maxval) throw std::runtime_error("PGM: sample exceeds maxval");
        }
    }
    return img;
}

PgmImage read_pgm(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("PGM: cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_pgm(ss.str());
}

void write_pgm16(const std::filesystem::path& file, const PgmImage& image) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("PGM: cannot write " + file.string());
    out << "P5\n" << image.width << " " << image.height << "\n65535\n";
    for (std::uint16_t px : image.pixels) {
        out.put(static_cast<char>(px >> 8));
        out.put(static_cast<char>(px & 0xff));
    }
}

RasterDensity2D load_density_raster(const PgmImage& image, const GrayDensityMapping& mapping,
                                    double cell_size) {
    if (mapping.gray_low == mapping.gray_high) {
        throw std::invalid_argument("load_density_raster: degenerate gray mapping");
    }
    if (!(mapping.rho_low > 0.0) || !(mapping.rho_high > 0.0)) {
        throw std::invalid_argument("load_density_raster: mapped densities must be positive");
    }
    const double slope =
        (mapping.rho_high - mapping.rho_low) / (mapping.gray_high - mapping.gray_low);
    std::vector<double> rho(image.pixels.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        rho[i] = mapping.rho_low + slope * (static_cast<double>(image.pixels[i]) - mapping.gray_low);
        if (!(rho[i] > 0.0)) {
            throw std::invalid_argument("load_density_raster: mapping yields non-positive density");
        }
    }
    return RasterDensity2D(image.width, image.height, cell_size, std::move(rho));
}

}  // namespace diffwalk
