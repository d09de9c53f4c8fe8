#include "doctest.h"

#include <cmath>

#include "bp/backproject.hpp"
#include "core/geometry.hpp"
#include "analysis/metrics.hpp"
#include "helpers.hpp"
#include "rc/range_compress.hpp"
#include "sim/simulate.hpp"

using namespace wsar;
using namespace wsar::test;

namespace {

ImageGrid centered_grid(double x, double y, double dx, double dy, std::int64_t nx,
                        std::int64_t ny) {
    return ImageGrid{x - 0.5 * static_cast<double>(nx - 1) * dx,
                     y - 0.5 * static_cast<double>(ny - 1) * dy,
                     dx,
                     dy,
                     nx,
                     ny};
}

std::int64_t argmax_power(const ComplexImage& img) {
    std::int64_t best = 0;
    double p_best = -1.0;
    for (std::int64_t i = 0; i < img.grid().size(); ++i) {
        const double p = std::norm(img.data()[static_cast<std::size_t>(i)]);
        if (p > p_best) {
            p_best = p;
            best = i;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("grid-node target focuses with full coherent gain") {
    SimulationSpec spec = single_target_spec(0.0, 2.05, std::polar(1.0, 0.7));
    const SignalCube cube = simulate(spec);
    const RangeProfileCube prof = range_compress(cube, Window::kRectangular, 8);
    const ImageGrid grid = centered_grid(0.0, 2.05, 5e-3, 5e-3, 9, 9);
    const ComplexImage img = backproject(prof, grid);

    const std::int64_t peak = argmax_power(img);
    CHECK(peak / grid.nx == 4);
    CHECK(peak % grid.nx == 4);

    const double expected = static_cast<double>(cube.n_slow() * cube.n_fast());
    CHECK(std::abs(img.data()[static_cast<std::size_t>(peak)]) ==
          doctest::Approx(expected).epsilon(0.01));

    // Image peak phase recovers the reflectivity phase.
    CHECK(std::arg(img.data()[static_cast<std::size_t>(peak)]) ==
          doctest::Approx(0.7).epsilon(0.015));
}

TEST_CASE("zero profiles give a zero image") {
    SimulationSpec spec;
    spec.params = small_params();
    spec.track = small_track(8);
    const SignalCube cube = simulate(spec);
    const RangeProfileCube prof = range_compress(cube, Window::kRectangular, 2);
    const ComplexImage img = backproject(prof, centered_grid(0.0, 2.0, 5e-3, 5e-3, 5, 5));
    CHECK(max_abs(img.data()) == 0.0);
}

TEST_CASE("image -3 dB widths track the analytic resolutions") {
    SimulationSpec spec = single_target_spec();
    const SignalCube cube = simulate(spec);
    const RangeProfileCube prof = range_compress(cube, Window::kRectangular, 8);
    const ImageGrid grid = centered_grid(0.0, 2.05, 8e-3, 3e-3, 41, 41);
    const ComplexImage img = backproject(prof, grid);
    const ImagePsfMetrics m = image_psf_metrics(img);

    const double rres = theoretical_range_resolution(spec.params);
    const double xres =
        theoretical_xrange_resolution(spec.params, spec.track.length(), 2.05);
    CHECK(m.range_width_m == doctest::Approx(0.886 * rres).epsilon(0.08));
    CHECK(m.xrange_width_m == doctest::Approx(0.886 * xres).epsilon(0.08));
}

TEST_CASE("fast path matches the time-domain oracle") {
    SimulationSpec spec;
    spec.params = RadarParams(90e9, 3e9, 128e-6, 2e6);  // 256 fast-time samples
    spec.track = small_track(32);
    spec.scene.push_back({{1.0, 0.0}, 0.004, 2.052, 0.0});
    spec.scene.push_back({{0.4, -0.8}, -0.05, 2.11, 0.0});
    spec.scene.push_back({{-0.2, 0.6}, 0.06, 1.98, 0.0});

    const SignalCube cube = simulate(spec);
    const ImageGrid grid = centered_grid(0.0, 2.05, 18e-3, 18e-3, 8, 8);
    const RangeProfileCube prof = range_compress(cube, Window::kRectangular, 4);
    const ComplexImage fast = backproject(prof, grid);
    const ComplexImage ref = backproject_reference(cube, grid);

    const std::int64_t pf = argmax_power(fast);
    const std::int64_t pr = argmax_power(ref);
    CHECK(pf == pr);
    const cdouble vf = fast.data()[static_cast<std::size_t>(pf)];
    const cdouble vr = ref.data()[static_cast<std::size_t>(pr)];
    CHECK(std::abs(vf - vr) / std::abs(vr) <= 0.02);
}

TEST_CASE("oracle is linear in the scene") {
    SimulationSpec a;
    a.params = RadarParams(90e9, 3e9, 128e-6, 2e6);
    a.track = small_track(16);
    a.scene.push_back({{1.0, 0.0}, 0.01, 2.0, 0.0});
    SimulationSpec b = a;
    b.scene[0] = {{0.0, -0.7}, -0.03, 2.08, 0.0};
    SimulationSpec both = a;
    both.scene.push_back(b.scene[0]);

    const ImageGrid grid = centered_grid(0.0, 2.04, 15e-3, 15e-3, 8, 8);
    const ComplexImage ia = backproject_reference(simulate(a), grid);
    const ComplexImage ib = backproject_reference(simulate(b), grid);
    const ComplexImage iab = backproject_reference(simulate(both), grid);

    double worst = 0.0;
    for (std::int64_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(iab.data()[static_cast<std::size_t>(i)] -
                                         ia.data()[static_cast<std::size_t>(i)] -
                                         ib.data()[static_cast<std::size_t>(i)]));
    }
    CHECK(worst <= 1e-9 * max_abs(iab.data()));

    // Zero cube -> zero image through the oracle as well.
    SimulationSpec empty;
    empty.params = a.params;
    empty.track = a.track;
    const ComplexImage iz = backproject_reference(simulate(empty), grid);
    CHECK(max_abs(iz.data()) == 0.0);

    CHECK_THROWS_AS(
        backproject_reference(simulate(empty), centered_grid(0.0, 2.0, 1e-3, 1e-3, 65, 64)),
        ContractError);
}

TEST_CASE("translation equivariance") {
    const double shift = 0.37;
    SimulationSpec spec;
    spec.params = RadarParams(90e9, 3e9, 128e-6, 2e6);
    spec.track = small_track(16);
    spec.scene.push_back({{1.0, 0.3}, 0.01, 2.03, 0.0});
    const ImageGrid grid = centered_grid(0.0, 2.03, 12e-3, 12e-3, 9, 9);

    SimulationSpec moved = spec;
    moved.track = ApertureTrack(spec.track.start() + shift, spec.track.spacing(),
                                spec.track.size());
    moved.scene[0].x += shift;
    ImageGrid grid_moved = grid;
    grid_moved.x0 += shift;

    const ComplexImage img = backproject(
        range_compress(simulate(spec), Window::kRectangular, 4), grid);
    const ComplexImage img_moved = backproject(
        range_compress(simulate(moved), Window::kRectangular, 4), grid_moved);

    CHECK(max_abs_diff(img.data(), img_moved.data()) <= 1e-6 * max_abs(img.data()));
}

TEST_CASE("Hamming looks keep the off-target floor below -35 dB") {
    SimulationSpec spec = single_target_spec();
    const SignalCube cube = simulate(spec);
    const RangeProfileCube prof = range_compress(cube, Window::kHamming, 4);
    const ImageGrid grid = centered_grid(0.0, 2.05, 30e-3, 12e-3, 25, 29);
    const ComplexImage img = backproject(prof, grid, Window::kHamming);

    const double rres = theoretical_range_resolution(spec.params);
    const double xres =
        theoretical_xrange_resolution(spec.params, spec.track.length(), 2.05);
    const double peak = max_abs(img.data());
    double worst_far = 0.0;
    for (std::int64_t iy = 0; iy < grid.ny; ++iy) {
        for (std::int64_t ix = 0; ix < grid.nx; ++ix) {
            const double cells = std::hypot(grid.x_at(ix) / xres,
                                            (grid.y_at(iy) - 2.05) / rres);
            if (cells > 5.0) {
                worst_far = std::max(worst_far, std::abs(img.at(iy, ix)));
            }
        }
    }
    CHECK(20.0 * std::log10(worst_far / peak) <= -35.0);
}

TEST_CASE("pixels beyond the unambiguous window contribute zero") {
    SimulationSpec spec = single_target_spec();
    const SignalCube cube = simulate(spec);
    const RangeProfileCube prof = range_compress(cube, Window::kRectangular, 4);
    // Nyquist range for these parameters is ~6.4 m; image far beyond it.
    const ComplexImage img = backproject(prof, centered_grid(0.0, 8.0, 5e-3, 5e-3, 5, 5));
    CHECK(max_abs(img.data()) == 0.0);
}
