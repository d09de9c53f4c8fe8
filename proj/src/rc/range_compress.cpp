#include "rc/range_compress.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "core/threading.hpp"
#include "rc/fft.hpp"

namespace wsar {

std::vector<double> make_window(Window window, std::int64_t n) {
    std::vector<double> w(static_cast<std::size_t>(n), 1.0);
    if (window == Window::kHamming && n > 1) {
        const double denom = static_cast<double>(n - 1);
        for (std::int64_t k = 0; k < n; ++k) {
            w[static_cast<std::size_t>(k)] =
                0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / denom);
        }
    }
    return w;
}

double window_coherent_gain(Window window, std::int64_t n) {
    const std::vector<double> w = make_window(window, n);
    double sum = 0.0;
    for (const double v : w) {
        sum += v;
    }
    return sum / static_cast<double>(n);
}

RangeProfileCube range_compress(const SignalCube& cube, Window window, int pad_factor) {
    RangeProfileCube out(cube.params(), cube.track(), window, pad_factor);
    out.set_coherent_gain(window_coherent_gain(window, cube.n_fast()));

    const std::int64_t n_fast = cube.n_fast();
    const std::int64_t n_bins = out.n_bins();
    const std::vector<double> w = make_window(window, n_fast);

    // Centroid derotation: multiply bin n by exp(+j pi (N-1) n / n_bins).
    std::vector<cdouble> derot(static_cast<std::size_t>(n_bins));
    for (std::int64_t n = 0; n < n_bins; ++n) {
        const double phase = std::numbers::pi * static_cast<double>(n_fast - 1) *
                             static_cast<double>(n) / static_cast<double>(n_bins);
        derot[static_cast<std::size_t>(n)] = {std::cos(phase), std::sin(phase)};
    }

    const std::int64_t n_slow = cube.n_slow();
#pragma omp parallel num_threads(thread_count())
    {
        std::vector<cdouble> buf(static_cast<std::size_t>(n_bins));
#pragma omp for schedule(static)
        for (std::int64_t eta = 0; eta < n_slow; ++eta) {
            const cdouble* in = cube.row(eta);
            for (std::int64_t k = 0; k < n_fast; ++k) {
                buf[static_cast<std::size_t>(k)] = in[k] * w[static_cast<std::size_t>(k)];
            }
            std::fill(buf.begin() + n_fast, buf.end(), cdouble{0.0, 0.0});
            cdouble* prof = out.row(eta);
            fft_forward(buf.data(), prof, n_bins);
            for (std::int64_t n = 0; n < n_bins; ++n) {
                prof[n] *= derot[static_cast<std::size_t>(n)];
            }
        }
    }
    return out;
}

namespace {

double interp_crossing(double p_inner, double p_outer, double threshold) {
    // Fractional distance from the inner sample to where power crosses the
    // threshold, linear in power.
    return (p_inner - threshold) / (p_inner - p_outer);
}

}  // namespace

ProfileMetrics profile_metrics(std::span<const cdouble> row) {
    const std::int64_t n = static_cast<std::int64_t>(row.size());
    if (n == 0) {
        throw ContractError("empty profile row");
    }
    std::vector<double> power(static_cast<std::size_t>(n));
    std::int64_t peak = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        power[static_cast<std::size_t>(i)] = std::norm(row[static_cast<std::size_t>(i)]);
        if (power[static_cast<std::size_t>(i)] > power[static_cast<std::size_t>(peak)]) {
            peak = i;
        }
    }
    const double p_peak = power[static_cast<std::size_t>(peak)];
    if (p_peak == 0.0) {
        throw ContractError("all-zero profile row");
    }

    ProfileMetrics m;
    m.peak_bin = peak;
    m.peak_db = 10.0 * std::log10(p_peak);

    const double half = 0.5 * p_peak;
    double left = 0.0;
    for (std::int64_t i = peak; i > 0; --i) {
        if (power[static_cast<std::size_t>(i - 1)] <= half) {
            left = static_cast<double>(peak - i) +
                   interp_crossing(power[static_cast<std::size_t>(i)],
                                   power[static_cast<std::size_t>(i - 1)], half);
            break;
        }
        if (i == 1) {
            left = static_cast<double>(peak);  // never crosses; clamp at the edge
        }
    }
    double right = 0.0;
    for (std::int64_t i = peak; i < n - 1; ++i) {
        if (power[static_cast<std::size_t>(i + 1)] <= half) {
            right = static_cast<double>(i - peak) +
                    interp_crossing(power[static_cast<std::size_t>(i)],
                                    power[static_cast<std::size_t>(i + 1)], half);
            break;
        }
        if (i == n - 2) {
            right = static_cast<double>(n - 1 - peak);
        }
    }
    m.width_3db_bins = left + right;

    // Main-lobe extent: walk down to the first turning point on each side.
    std::int64_t lo = peak;
    while (lo > 0 && power[static_cast<std::size_t>(lo - 1)] <
                         power[static_cast<std::size_t>(lo)]) {
        --lo;
    }
    std::int64_t hi = peak;
    while (hi < n - 1 && power[static_cast<std::size_t>(hi + 1)] <
                             power[static_cast<std::size_t>(hi)]) {
        ++hi;
    }
    double p_side = 0.0;
    for (std::int64_t i = 0; i < lo; ++i) {
        p_side = std::max(p_side, power[static_cast<std::size_t>(i)]);
    }
    for (std::int64_t i = hi + 1; i < n; ++i) {
        p_side = std::max(p_side, power[static_cast<std::size_t>(i)]);
    }
    m.peak_sidelobe_db = p_side > 0.0 ? 10.0 * std::log10(p_side / p_peak)
                                      : -std::numeric_limits<double>::infinity();
    return m;
}

}  // namespace wsar
