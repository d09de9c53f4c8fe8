#include "io/image_export.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>

namespace wsar {

void write_pgm(const Field2D& db_field, double dynamic_range_db, const std::string& path) {
    if (!(dynamic_range_db > 0.0)) {
        throw ContractError("dynamic range must be positive");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << "P5\n" << db_field.nx() << " " << db_field.ny() << "\n65535\n";
    std::vector<unsigned char> row(static_cast<std::size_t>(db_field.nx()) * 2);
    for (std::int64_t iy = 0; iy < db_field.ny(); ++iy) {
        for (std::int64_t ix = 0; ix < db_field.nx(); ++ix) {
            const double v =
                std::clamp((db_field.at(iy, ix) + dynamic_range_db) / dynamic_range_db, 0.0, 1.0);
            const auto q = static_cast<std::uint16_t>(std::lround(v * 65535.0));
            row[static_cast<std::size_t>(ix) * 2] = static_cast<unsigned char>(q >> 8);
            row[static_cast<std::size_t>(ix) * 2 + 1] = static_cast<unsigned char>(q & 0xFF);
        }
        out.write(reinterpret_cast<const char*>(row.data()),
                  static_cast<std::streamsize>(row.size()));
    }
    out.close();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

namespace {

// Next whitespace-delimited token, skipping '#' comments.
std::string next_token(std::istream& in) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') {
                c = in.get();
            }
        } else if (std::isspace(c) != 0) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && std::isspace(c) == 0) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok;
}

}  // namespace

Field2D read_pgm(const std::string& path, double dynamic_range_db) {
    if (!(dynamic_range_db > 0.0)) {
        throw ContractError("dynamic range must be positive");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    if (next_token(in) != "P5") {
        throw IoError("not a binary PGM: " + path);
    }
    const std::string ws = next_token(in);
    const std::string hs = next_token(in);
    const std::string ms = next_token(in);
    std::int64_t w = 0;
    std::int64_t h = 0;
    std::int64_t maxval = 0;
    try {
        w = std::stoll(ws);
        h = std::stoll(hs);
        maxval = std::stoll(ms);
    } catch (const std::exception&) {
        throw IoError("malformed PGM header: " + path);
    }
    if (w < 1 || h < 1 || (maxval != 255 && maxval != 65535)) {
        throw IoError("unsupported PGM geometry: " + path);
    }

    Field2D field(h, w);
    const std::size_t bytes_per = maxval == 65535 ? 2 : 1;
    std::vector<unsigned char> buf(static_cast<std::size_t>(w) * bytes_per);
    for (std::int64_t iy = 0; iy < h; ++iy) {
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() != static_cast<std::streamsize>(buf.size())) {
            throw IoError("truncated PGM: " + path);
        }
        for (std::int64_t ix = 0; ix < w; ++ix) {
            std::uint32_t q = buf[static_cast<std::size_t>(ix) * bytes_per];
            if (bytes_per == 2) {
                q = (q << 8) | buf[static_cast<std::size_t>(ix) * 2 + 1];
            }
            const double v = static_cast<double>(q) / static_cast<double>(maxval);
            field.at(iy, ix) = v * dynamic_range_db - dynamic_range_db;
        }
    }
    return field;
}

void write_ppm(const RgbImage& rgb, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << "P6\n" << rgb.nx << " " << rgb.ny << "\n255\n";
    out.write(reinterpret_cast<const char*>(rgb.data.data()),
              static_cast<std::streamsize>(rgb.data.size()));
    out.close();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

void write_pointcloud_csv(const std::vector<PointDetection>& points, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out << "x_m,y_m,intensity_db\n";
    char buf[128];
    for (const PointDetection& p : points) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.4f\n", p.x, p.y, p.intensity_db);
        out << buf;
    }
    out.close();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

}  // namespace wsar
