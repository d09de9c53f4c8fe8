#include "io/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>

namespace wsar {

static_assert(std::endian::native == std::endian::little,
              "container codecs assume a little-endian host");

namespace {

class Writer {
public:
    explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) {
            throw IoError("cannot open for writing: " + path);
        }
        path_ = path;
    }

    void magic(const char m[4]) { out_.write(m, 4); }
    void u32(std::uint32_t v) { raw(&v, sizeof v); }
    void u64(std::uint64_t v) { raw(&v, sizeof v); }
    void f64(double v) { raw(&v, sizeof v); }
    void complex_block(const std::vector<cdouble>& data) {
        raw(data.data(), data.size() * sizeof(cdouble));
    }
    void close() {
        out_.close();
        if (!out_) {
            throw IoError("write failed: " + path_);
        }
    }

private:
    void raw(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    }
    std::ofstream out_;
    std::string path_;
};

class Reader {
public:
    explicit Reader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
        if (!in_) {
            throw IoError("cannot open for reading: " + path);
        }
    }

    void magic(const char expect[4]) {
        char m[4] = {};
        raw(m, 4);
        if (std::memcmp(m, expect, 4) != 0) {
            throw IoError("bad magic in " + path_);
        }
    }
    std::uint32_t u32() {
        std::uint32_t v;
        raw(&v, sizeof v);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v;
        raw(&v, sizeof v);
        return v;
    }
    double f64() {
        double v;
        raw(&v, sizeof v);
        return v;
    }
    void complex_block(std::vector<cdouble>& data) {
        raw(data.data(), data.size() * sizeof(cdouble));
    }

private:
    void raw(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (in_.gcount() != static_cast<std::streamsize>(n)) {
            throw IoError("truncated file: " + path_);
        }
    }
    std::ifstream in_;
    std::string path_;
};

constexpr std::uint32_t kVersion = 1;

// Files record the sample count explicitly; nudge T by ulps so the
// reconstructed params derive exactly that count.
RadarParams params_for(double f_c, double b, double T, double f_s, std::uint64_t n_fast) {
    double t = T;
    for (int i = 0; i < 4 && static_cast<std::uint64_t>(f_s * t) < n_fast; ++i) {
        t = std::nextafter(t, std::numeric_limits<double>::infinity());
    }
    RadarParams p(f_c, b, t, f_s);
    if (static_cast<std::uint64_t>(p.n_fast()) != n_fast) {
        throw IoError("inconsistent sample count in container header");
    }
    return p;
}

Window window_from(std::uint32_t v) {
    if (v > 1) {
        throw IoError("unknown window id in container");
    }
    return static_cast<Window>(v);
}

}  // namespace

void write_cube(const SignalCube& cube, const std::string& path) {
    Writer w(path);
    w.magic("WSAR");
    w.u32(kVersion);
    w.u64(static_cast<std::uint64_t>(cube.n_slow()));
    w.u64(static_cast<std::uint64_t>(cube.n_fast()));
    w.f64(cube.params().f_c);
    w.f64(cube.params().b);
    w.f64(cube.params().T);
    w.f64(cube.params().f_s);
    w.f64(cube.track().start());
    w.f64(cube.track().spacing());
    w.complex_block(cube.data());
    w.close();
}

SignalCube read_cube(const std::string& path) {
    Reader r(path);
    r.magic("WSAR");
    if (r.u32() != kVersion) {
        throw IoError("unsupported WSAR version");
    }
    const std::uint64_t n_slow = r.u64();
    const std::uint64_t n_fast = r.u64();
    const double f_c = r.f64();
    const double b = r.f64();
    const double T = r.f64();
    const double f_s = r.f64();
    const double start = r.f64();
    const double spacing = r.f64();
    SignalCube cube(params_for(f_c, b, T, f_s, n_fast),
                    ApertureTrack(start, spacing, static_cast<std::int64_t>(n_slow)));
    r.complex_block(cube.data());
    return cube;
}

void write_profiles(const RangeProfileCube& profiles, const std::string& path) {
    Writer w(path);
    w.magic("WPRF");
    w.u32(kVersion);
    w.u64(static_cast<std::uint64_t>(profiles.n_slow()));
    w.u64(static_cast<std::uint64_t>(profiles.n_bins()));
    w.u32(static_cast<std::uint32_t>(profiles.window()));
    w.u32(static_cast<std::uint32_t>(profiles.pad_factor()));
    w.f64(profiles.params().f_c);
    w.f64(profiles.params().b);
    w.f64(profiles.params().T);
    w.f64(profiles.params().f_s);
    w.f64(profiles.track().start());
    w.f64(profiles.track().spacing());
    w.f64(profiles.coherent_gain());
    w.complex_block(profiles.data());
    w.close();
}

RangeProfileCube read_profiles(const std::string& path) {
    Reader r(path);
    r.magic("WPRF");
    if (r.u32() != kVersion) {
        throw IoError("unsupported WPRF version");
    }
    const std::uint64_t n_slow = r.u64();
    const std::uint64_t n_bins = r.u64();
    const Window window = window_from(r.u32());
    const std::uint32_t pad = r.u32();
    const double f_c = r.f64();
    const double b = r.f64();
    const double T = r.f64();
    const double f_s = r.f64();
    const double start = r.f64();
    const double spacing = r.f64();
    const double gain = r.f64();
    if (pad == 0 || n_bins % pad != 0) {
        throw IoError("inconsistent pad factor in WPRF header");
    }
    RangeProfileCube profiles(params_for(f_c, b, T, f_s, n_bins / pad),
                              ApertureTrack(start, spacing, static_cast<std::int64_t>(n_slow)),
                              window, static_cast<int>(pad));
    profiles.set_coherent_gain(gain);
    if (static_cast<std::uint64_t>(profiles.n_bins()) != n_bins) {
        throw IoError("inconsistent bin count in WPRF header");
    }
    r.complex_block(profiles.data());
    return profiles;
}

void write_image(const ComplexImage& img, const std::string& path) {
    Writer w(path);
    w.magic("WIMG");
    w.u32(kVersion);
    w.u64(static_cast<std::uint64_t>(img.ny()));
    w.u64(static_cast<std::uint64_t>(img.nx()));
    w.f64(img.grid().x0);
    w.f64(img.grid().y0);
    w.f64(img.grid().dx);
    w.f64(img.grid().dy);
    w.u32(static_cast<std::uint32_t>(img.range_window()));
    w.u32(static_cast<std::uint32_t>(img.azimuth_window()));
    w.f64(img.look_gain());
    w.complex_block(img.data());
    w.close();
}

ComplexImage read_image(const std::string& path) {
    Reader r(path);
    r.magic("WIMG");
    if (r.u32() != kVersion) {
        throw IoError("unsupported WIMG version");
    }
    ImageGrid grid;
    grid.ny = static_cast<std::int64_t>(r.u64());
    grid.nx = static_cast<std::int64_t>(r.u64());
    grid.x0 = r.f64();
    grid.y0 = r.f64();
    grid.dx = r.f64();
    grid.dy = r.f64();
    const Window range_w = window_from(r.u32());
    const Window azimuth_w = window_from(r.u32());
    const double gain = r.f64();
    ComplexImage img(grid);
    img.set_look(range_w, azimuth_w, gain);
    r.complex_block(img.data());
    return img;
}

}  // namespace wsar
