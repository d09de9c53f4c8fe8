#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "analysis/pointcloud.hpp"
#include "bp/backproject.hpp"
#include "helpers.hpp"
#include "io/config.hpp"
#include "io/container.hpp"
#include "io/image_export.hpp"
#include "rc/range_compress.hpp"
#include "sim/simulate.hpp"

using namespace wsar;
using namespace wsar::test;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("wsar_test_" + name);
}

std::string file_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("WSAR round-trip is bit-exact") {
    SimulationSpec spec = single_target_spec(0.01, 2.02, {0.8, -0.6});
    spec.noise_sigma = 0.3;
    spec.rng_seed = 12;
    const SignalCube cube = simulate(spec);

    const auto p1 = temp_path("cube1.wsar");
    const auto p2 = temp_path("cube2.wsar");
    write_cube(cube, p1.string());
    const SignalCube back = read_cube(p1.string());
    write_cube(back, p2.string());

    CHECK(file_bytes(p1) == file_bytes(p2));
    CHECK(back.n_slow() == cube.n_slow());
    CHECK(back.n_fast() == cube.n_fast());
    CHECK(back.params().f_c == cube.params().f_c);
    CHECK(back.track().spacing() == cube.track().spacing());
    CHECK(max_abs_diff(back.data(), cube.data()) == 0.0);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("WPRF and WIMG round-trips are bit-exact") {
    SimulationSpec spec = single_target_spec();
    const SignalCube cube = simulate(spec);
    const RangeProfileCube prof = range_compress(cube, Window::kHamming, 2);

    const auto pp1 = temp_path("prof1.wprf");
    const auto pp2 = temp_path("prof2.wprf");
    write_profiles(prof, pp1.string());
    const RangeProfileCube prof_back = read_profiles(pp1.string());
    write_profiles(prof_back, pp2.string());
    CHECK(file_bytes(pp1) == file_bytes(pp2));
    CHECK(prof_back.window() == Window::kHamming);
    CHECK(prof_back.pad_factor() == 2);
    CHECK(prof_back.coherent_gain() == prof.coherent_gain());
    CHECK(max_abs_diff(prof_back.data(), prof.data()) == 0.0);

    const ImageGrid grid{-0.02, 2.03, 2e-3, 2e-3, 11, 9};
    const ComplexImage img = backproject(prof, grid, Window::kHamming);
    const auto pi1 = temp_path("img1.wimg");
    const auto pi2 = temp_path("img2.wimg");
    write_image(img, pi1.string());
    const ComplexImage img_back = read_image(pi1.string());
    write_image(img_back, pi2.string());
    CHECK(file_bytes(pi1) == file_bytes(pi2));
    CHECK(img_back.grid() == img.grid());
    CHECK(img_back.range_window() == img.range_window());
    CHECK(img_back.azimuth_window() == img.azimuth_window());
    CHECK(img_back.look_gain() == img.look_gain());

    std::filesystem::remove(pp1);
    std::filesystem::remove(pp2);
    std::filesystem::remove(pi1);
    std::filesystem::remove(pi2);
}

TEST_CASE("container reads reject foreign files") {
    const auto p = temp_path("junk.bin");
    std::ofstream(p) << "definitely not a container";
    CHECK_THROWS_AS(read_cube(p.string()), IoError);
    CHECK_THROWS_AS(read_image(p.string()), IoError);
    CHECK_THROWS_AS(read_cube(temp_path("missing.wsar").string()), IoError);
    std::filesystem::remove(p);
}

TEST_CASE("PGM writes 16-bit big-endian samples and reads back") {
    Field2D db(1, 3);
    db.at(0, 0) = 0.0;    // peak -> 65535
    db.at(0, 1) = -25.0;  // mid scale
    db.at(0, 2) = -50.0;  // floor -> 0

    const auto p = temp_path("field.pgm");
    write_pgm(db, 50.0, p.string());

    const std::string bytes = file_bytes(p);
    CHECK(bytes.rfind("P5\n3 1\n65535\n", 0) == 0);
    const std::size_t off = bytes.size() - 6;
    CHECK(static_cast<unsigned char>(bytes[off]) == 0xFF);
    CHECK(static_cast<unsigned char>(bytes[off + 1]) == 0xFF);
    CHECK(static_cast<unsigned char>(bytes[off + 4]) == 0x00);
    CHECK(static_cast<unsigned char>(bytes[off + 5]) == 0x00);

    const Field2D back = read_pgm(p.string(), 50.0);
    REQUIRE(back.nx() == 3);
    REQUIRE(back.ny() == 1);
    for (std::int64_t i = 0; i < 3; ++i) {
        CHECK(back.at(0, i) == doctest::Approx(db.at(0, i)).epsilon(1e-3));
    }
    std::filesystem::remove(p);
}

TEST_CASE("PPM header and payload size") {
    RgbImage rgb;
    rgb.nx = 4;
    rgb.ny = 2;
    rgb.data.assign(24, 17);
    const auto p = temp_path("img.ppm");
    write_ppm(rgb, p.string());
    const std::string bytes = file_bytes(p);
    CHECK(bytes.rfind("P6\n4 2\n255\n", 0) == 0);
    CHECK(bytes.size() == 11 + 24);
    std::filesystem::remove(p);
}

TEST_CASE("point-cloud CSV format") {
    const std::vector<PointDetection> pts = {{0.001, 2.05, -3.5}, {-0.02, 2.11, 0.0}};
    const auto p = temp_path("points.csv");
    write_pointcloud_csv(pts, p.string());
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x_m,y_m,intensity_db");
    std::getline(in, line);
    CHECK(line == "0.001,2.05,-3.5000");
    std::getline(in, line);
    CHECK(line == "-0.02,2.11,0.0000");
    std::filesystem::remove(p);
}

TEST_CASE("scenario parsing") {
    std::stringstream cfg(R"(# scene description
f_c = 90e9
b   = 24e9   # Hz
T = 5e-3
f_s = 5e6

track_start = -0.2
track_spacing = 0.833e-3
track_count = 481

grid_x0 = -0.1
grid_y0 = 1.9
grid_dx = 2e-3
grid_dy = 2e-3
grid_nx = 101
grid_ny = 151

noise_sigma = 0.5
seed = 77
snr_region = 0.17, 0.205, 1.96, 2.14

target = 0.0, 2.05, 1.0, 0.0
target = -0.03, 2.10, 0.5, -0.5, 1e-11
)");
    const Scenario sc = parse_scenario(cfg);
    CHECK(sc.sim.params.f_c == 90e9);
    CHECK(sc.sim.params.n_fast() == 25000);
    CHECK(sc.sim.track.size() == 481);
    CHECK(sc.grid.ny == 151);
    CHECK(sc.sim.noise_sigma == 0.5);
    CHECK(sc.sim.rng_seed == 77);
    REQUIRE(sc.sim.scene.size() == 2);
    CHECK(sc.sim.scene[1].rcs_slope == 1e-11);
    CHECK(sc.sim.scene[1].sigma == cdouble{0.5, -0.5});
    REQUIRE(sc.has_snr_region);
    CHECK(sc.snr_region.x1 == 0.205);
}

TEST_CASE("scenario parse errors carry line numbers") {
    const auto parse = [](const std::string& text) {
        std::stringstream ss(text);
        return parse_scenario(ss);
    };
    const std::string base =
        "f_c = 90e9\nb = 24e9\nT = 5e-3\nf_s = 5e6\n"
        "track_start = 0\ntrack_spacing = 1e-3\ntrack_count = 4\n"
        "grid_x0 = 0\ngrid_y0 = 1\ngrid_dx = 1e-3\ngrid_dy = 1e-3\n"
        "grid_nx = 4\ngrid_ny = 4\n";

    CHECK_THROWS_WITH_AS(parse(base + "bogus line\n"), "line 14: expected 'key = value'",
                         ConfigError);
    CHECK_THROWS_AS(parse(base + "f_s = 1e6\n"), ConfigError);     // duplicate
    CHECK_THROWS_AS(parse(base + "mystery = 3\n"), ConfigError);   // unknown key
    CHECK_THROWS_AS(parse(base + "target = 1,2\n"), ConfigError);  // bad arity
    CHECK_THROWS_AS(parse(base + "noise_sigma = fast\n"), ConfigError);
    CHECK_THROWS_AS(parse("f_c = 90e9\n"), ConfigError);  // missing keys
    // Contract violations surface as config errors too.
    CHECK_THROWS_AS(parse(base + "target = 0, -1, 1, 0\n"), ConfigError);

    CHECK_THROWS_AS(load_scenario(temp_path("missing.cfg").string()), IoError);
}

TEST_CASE("point cloud extraction on focused images") {
    SimulationSpec spec = single_target_spec(0.0, 2.05);
    const SignalCube cube = simulate(spec);
    const RangeProfileCube prof = range_compress(cube, Window::kHamming, 4);
    const ImageGrid grid{-0.06, 2.0, 2.5e-3, 2.5e-3, 49, 137};
    const ComplexImage img = backproject(prof, grid, Window::kHamming);

    const auto pts = extract_point_cloud(img, 30.0, true);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(pts[0].y == doctest::Approx(2.05).epsilon(1e-9));
    CHECK(pts[0].intensity_db == doctest::Approx(0.0));

    const auto flat = extract_point_cloud(img, 30.0, false);
    REQUIRE(flat.size() == 1);
    CHECK(flat[0].intensity_db == 0.0);

    // Two targets ten range cells apart -> exactly two detections.
    SimulationSpec two = spec;
    two.scene.push_back({{1.0, 0.0}, 0.0, 2.30, 0.0});
    const SignalCube cube2 = simulate(two);
    const ComplexImage img2 =
        backproject(range_compress(cube2, Window::kHamming, 4), grid, Window::kHamming);
    const auto pts2 = extract_point_cloud(img2, 20.0, false);
    CHECK(pts2.size() == 2);

    const ComplexImage zeros(grid);
    CHECK_THROWS_AS(extract_point_cloud(zeros, 30.0, true), ContractError);
    CHECK_THROWS_AS(extract_point_cloud(img, -1.0, true), ContractError);
}
