#include "subarray/subarray.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bp/backproject.hpp"
#include "core/geometry.hpp"
#include "core/rng.hpp"
#include "core/threading.hpp"
#include "rc/range_compress.hpp"

namespace wsar {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kDegToRad = std::numbers::pi / 180.0;
}  // namespace

void SubarraySpec::validate(std::int64_t n_slow) const {
    if (m < 1 || m > n_slow) {
        throw ContractError("sub-array length must satisfy 1 <= m <= n_slow");
    }
    if (overlap < 0 || overlap > m - 1) {
        throw ContractError("overlap must satisfy 0 <= overlap <= m-1");
    }
    if (!(std::abs(steer_deg) <= 90.0)) {
        throw ContractError("steering angle must lie within +-90 degrees");
    }
    if (!(focus_range_m > 0.0)) {
        throw ContractError("focal range must be positive");
    }
}

ComplexImage subarray_image(const RangeProfileCube& profiles, const ImageGrid& grid,
                            const SubarraySpec& spec) {
    grid.validate();
    const std::int64_t n_slow = profiles.n_slow();
    spec.validate(n_slow);

    const std::int64_t step = spec.step();
    const std::int64_t n_sub = spec.count(n_slow);
    const std::int64_t n_used = (n_sub - 1) * step + spec.m;

    const ApertureTrack& track = profiles.track();
    const std::vector<double>& track_x = track.positions();
    const double steer = spec.steer_deg * kDegToRad;
    const double xq = track.center() + spec.focus_range_m * std::sin(steer);
    const double yq = spec.focus_range_m * std::cos(steer);

    const double phase_scale = kFourPi * profiles.params().f_c / kSpeedOfLight;

    // Sub-array centroids and steering weights (pixel independent).
    std::vector<double> centroid_x(static_cast<std::size_t>(n_sub));
    std::vector<cdouble> steer_w(static_cast<std::size_t>(n_sub * spec.m));
    for (std::int64_t s = 0; s < n_sub; ++s) {
        const double cx = track_x[static_cast<std::size_t>(s * step)] +
                          0.5 * static_cast<double>(spec.m - 1) * track.spacing();
        centroid_x[static_cast<std::size_t>(s)] = cx;
        const double r_qc = slant_range(cx, xq, yq);
        for (std::int64_t j = 0; j < spec.m; ++j) {
            const double r_qi =
                slant_range(track_x[static_cast<std::size_t>(s * step + j)], xq, yq);
            const double phase = phase_scale * (r_qi - r_qc);
            steer_w[static_cast<std::size_t>(s * spec.m + j)] = {std::cos(phase),
                                                                 -std::sin(phase)};
        }
    }

    ComplexImage img(grid);
    img.set_look(profiles.window(), Window::kRectangular, profiles.coherent_gain());

    const double bin_scale = 2.0 * profiles.params().beta /
                             (kSpeedOfLight * profiles.params().f_s) *
                             static_cast<double>(profiles.n_bins());
    const std::int64_t max_bin = profiles.n_bins() / 2 - 1;
    const std::int64_t n_px = grid.size();

#pragma omp parallel num_threads(thread_count())
    {
        std::vector<cdouble> z(static_cast<std::size_t>(n_used));
#pragma omp for schedule(static)
        for (std::int64_t p = 0; p < n_px; ++p) {
            const std::int64_t iy = p / grid.nx;
            const std::int64_t ix = p % grid.nx;
            const double xp = grid.x_at(ix);
            const double yp = grid.y_at(iy);

            // Per-element range sample at this pixel's beat frequency.
            for (std::int64_t i = 0; i < n_used; ++i) {
                const double r = slant_range(track_x[static_cast<std::size_t>(i)], xp, yp);
                const double fb = r * bin_scale;
                const std::int64_t b0 = static_cast<std::int64_t>(fb);
                if (fb < 0.0 || b0 >= max_bin) {
                    z[static_cast<std::size_t>(i)] = {0.0, 0.0};
                    continue;
                }
                const double frac = fb - static_cast<double>(b0);
                const cdouble* prof = profiles.row(i);
                z[static_cast<std::size_t>(i)] = prof[b0] * (1.0 - frac) + prof[b0 + 1] * frac;
            }

            cdouble acc{0.0, 0.0};
            for (std::int64_t s = 0; s < n_sub; ++s) {
                cdouble beam{0.0, 0.0};
                const cdouble* w = steer_w.data() + s * spec.m;
                const cdouble* zs = z.data() + s * step;
                for (std::int64_t j = 0; j < spec.m; ++j) {
                    beam += zs[j] * w[j];
                }
                const double r = slant_range(centroid_x[static_cast<std::size_t>(s)], xp, yp);
                const double phase = phase_scale * r;
                const cdouble kernel{std::cos(phase), -std::sin(phase)};
                acc += beam * kernel;
            }
            img.data()[static_cast<std::size_t>(p)] = acc;
        }
    }
    return img;
}

namespace {

struct PeakFloor {
    double peak_db;
    double floor_db;
};

PeakFloor peak_and_floor(const ComplexImage& img, std::int64_t rx0, std::int64_t rx1,
                         std::int64_t ry0, std::int64_t ry1) {
    double peak_pow = 0.0;
    for (const cdouble& v : img.data()) {
        peak_pow = std::max(peak_pow, std::norm(v));
    }
    double sum = 0.0;
    std::int64_t count = 0;
    for (std::int64_t iy = ry0; iy <= ry1; ++iy) {
        for (std::int64_t ix = rx0; ix <= rx1; ++ix) {
            sum += std::norm(img.at(iy, ix));
            ++count;
        }
    }
    return {10.0 * std::log10(peak_pow), 10.0 * std::log10(sum / static_cast<double>(count))};
}

}  // namespace

SnrGainResult measure_snr_gain(const SimulationSpec& base, const ImageGrid& grid,
                               const SubarraySpec& spec, const NoiseRegion& region,
                               int n_trials, std::uint64_t seed, int pad_factor) {
    if (n_trials < 20) {
        throw ContractError("at least 20 Monte Carlo trials required");
    }
    if (!(base.noise_sigma > 0.0)) {
        throw ContractError("zero-noise SNR");
    }
    grid.validate();
    spec.validate(base.track.size());

    // Region must lie on the grid and clear of every target's main lobe.
    const auto ix_of = [&](double x) {
        return static_cast<std::int64_t>(std::llround((x - grid.x0) / grid.dx));
    };
    const auto iy_of = [&](double y) {
        return static_cast<std::int64_t>(std::llround((y - grid.y0) / grid.dy));
    };
    if (ix_of(region.x1) < 0 || ix_of(region.x0) > grid.nx - 1 || iy_of(region.y1) < 0 ||
        iy_of(region.y0) > grid.ny - 1 || region.x0 > region.x1 || region.y0 > region.y1) {
        throw ContractError("noise region lies outside the image grid");
    }
    const std::int64_t rx0 = std::clamp<std::int64_t>(ix_of(region.x0), 0, grid.nx - 1);
    const std::int64_t rx1 = std::clamp<std::int64_t>(ix_of(region.x1), 0, grid.nx - 1);
    const std::int64_t ry0 = std::clamp<std::int64_t>(iy_of(region.y0), 0, grid.ny - 1);
    const std::int64_t ry1 = std::clamp<std::int64_t>(iy_of(region.y1), 0, grid.ny - 1);
    const double rres = theoretical_range_resolution(base.params);
    const double xres =
        theoretical_xrange_resolution(base.params, base.track.length(), grid.y0);
    const double clearance = 3.0 * std::max(rres, xres);
    for (const PointTarget& t : base.scene) {
        const double dx = std::max({region.x0 - t.x, t.x - region.x1, 0.0});
        const double dy = std::max({region.y0 - t.y, t.y - region.y1, 0.0});
        if (std::hypot(dx, dy) < clearance) {
            throw ContractError("noise region overlaps a target main lobe");
        }
    }

    SimulationSpec clean = base;
    clean.noise_sigma = 0.0;
    const SignalCube signal = simulate(clean);
    const std::uint64_t trial_seed = labeled_seed(seed, "snr.trial");

    SnrGainResult res;
    res.per_trial_db.reserve(static_cast<std::size_t>(n_trials));
    double sum_gain = 0.0;
    double sum_sub = 0.0;
    double sum_plain = 0.0;
    for (int trial = 0; trial < n_trials; ++trial) {
        const SignalCube noisy =
            add_noise(signal, base.noise_sigma, mix_seed(trial_seed, static_cast<std::uint64_t>(trial)));
        const RangeProfileCube profiles =
            range_compress(noisy, Window::kRectangular, pad_factor);
        const ComplexImage plain = backproject(profiles, grid);
        const ComplexImage sub = subarray_image(profiles, grid, spec);
        const PeakFloor pf_plain = peak_and_floor(plain, rx0, rx1, ry0, ry1);
        const PeakFloor pf_sub = peak_and_floor(sub, rx0, rx1, ry0, ry1);
        const double snr_plain = pf_plain.peak_db - pf_plain.floor_db;
        const double snr_sub = pf_sub.peak_db - pf_sub.floor_db;
        res.per_trial_db.push_back(snr_sub - snr_plain);
        sum_gain += snr_sub - snr_plain;
        sum_sub += snr_sub;
        sum_plain += snr_plain;
    }
    res.gain_db = sum_gain / n_trials;
    res.mean_snr_subarray_db = sum_sub / n_trials;
    res.mean_snr_plain_db = sum_plain / n_trials;
    return res;
}

}  // namespace wsar
