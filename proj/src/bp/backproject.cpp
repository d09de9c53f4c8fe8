#include "bp/backproject.hpp"

#include <cmath>
#include <numbers>

#include "core/geometry.hpp"
#include "core/threading.hpp"
#include "rc/range_compress.hpp"

namespace wsar {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

ComplexImage backproject(const RangeProfileCube& profiles, const ImageGrid& grid,
                         Window azimuth_window) {
    grid.validate();
    const std::int64_t n_slow = profiles.n_slow();
    if (n_slow < 1) {
        throw ContractError("profiles and track must be non-empty");
    }

    ComplexImage img(grid);
    const double az_gain = window_coherent_gain(azimuth_window, n_slow);
    img.set_look(profiles.window(), azimuth_window, profiles.coherent_gain() * az_gain);

    const std::vector<double> w_az = make_window(azimuth_window, n_slow);
    const std::vector<double>& track_x = profiles.track().positions();
    const double phase_scale = kFourPi * profiles.params().f_c / kSpeedOfLight;
    const double bin_scale = 2.0 * profiles.params().beta /
                             (kSpeedOfLight * profiles.params().f_s) *
                             static_cast<double>(profiles.n_bins());
    // Keep interpolation inside the physical one-sided band.
    const std::int64_t max_bin = profiles.n_bins() / 2 - 1;
    const std::int64_t n_px = grid.size();

#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t p = 0; p < n_px; ++p) {
        const std::int64_t iy = p / grid.nx;
        const std::int64_t ix = p % grid.nx;
        const double xp = grid.x_at(ix);
        const double yp = grid.y_at(iy);
        cdouble acc{0.0, 0.0};
        for (std::int64_t eta = 0; eta < n_slow; ++eta) {
            const double r = slant_range(track_x[static_cast<std::size_t>(eta)], xp, yp);
            const double fb = r * bin_scale;
            const std::int64_t b0 = static_cast<std::int64_t>(fb);
            if (fb < 0.0 || b0 >= max_bin) {
                continue;
            }
            const double frac = fb - static_cast<double>(b0);
            const cdouble* prof = profiles.row(eta);
            const cdouble sample = prof[b0] * (1.0 - frac) + prof[b0 + 1] * frac;
            const double phase = phase_scale * r;
            const cdouble kernel{std::cos(phase), -std::sin(phase)};
            acc += sample * w_az[static_cast<std::size_t>(eta)] * kernel;
        }
        img.data()[static_cast<std::size_t>(p)] = acc;
    }
    return img;
}

ComplexImage backproject_reference(const SignalCube& cube, const ImageGrid& grid) {
    grid.validate();
    if (grid.nx > 64 || grid.ny > 64) {
        throw ContractError("reference back-projection is limited to 64x64 grids");
    }

    ComplexImage img(grid);
    const RadarParams& p = cube.params();
    const std::int64_t n_slow = cube.n_slow();
    const std::int64_t n_fast = cube.n_fast();
    const double t0 = p.fast_time(0);
    const double dt = 1.0 / p.f_s;
    const std::vector<double>& track_x = cube.track().positions();
    const std::int64_t n_px = grid.size();

#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t px = 0; px < n_px; ++px) {
        const std::int64_t iy = px / grid.nx;
        const std::int64_t ix = px % grid.nx;
        const double xp = grid.x_at(ix);
        const double yp = grid.y_at(iy);
        cdouble acc{0.0, 0.0};
        for (std::int64_t eta = 0; eta < n_slow; ++eta) {
            const double r = slant_range(track_x[static_cast<std::size_t>(eta)], xp, yp);
            const double phase0 = kFourPi / kSpeedOfLight * (p.f_c + p.beta * t0) * r;
            const double dphase = kFourPi / kSpeedOfLight * p.beta * r * dt;
            cdouble rot{std::cos(phase0), -std::sin(phase0)};
            const cdouble step{std::cos(dphase), -std::sin(dphase)};
            const cdouble* row = cube.row(eta);
            for (std::int64_t k = 0; k < n_fast; ++k) {
                acc += row[k] * rot;
                rot *= step;
            }
        }
        img.data()[static_cast<std::size_t>(px)] = acc;
    }
    return img;
}

}  // namespace wsar
