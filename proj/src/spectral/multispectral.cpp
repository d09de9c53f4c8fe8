#include "spectral/multispectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wsar {

namespace {

// Smallest T whose floor(f_s * T) equals exactly n samples.
double chirp_time_for_samples(std::int64_t n, double f_s) {
    double t = static_cast<double>(n) / f_s;
    while (static_cast<std::int64_t>(f_s * t) < n) {
        t = std::nextafter(t, std::numeric_limits<double>::infinity());
    }
    return t;
}

}  // namespace

SubbandSplit split_subbands(const SignalCube& cube) {
    const std::int64_t n_fast = cube.n_fast();
    if (n_fast < 3) {
        throw ContractError("need at least 3 fast-time samples to form sub-bands");
    }
    const std::int64_t seg = n_fast / 3;
    const RadarParams& p = cube.params();

    SubbandSplit split;
    split.segment_length = seg;
    split.remainder = n_fast - 3 * seg;

    for (int k = 0; k < 3; ++k) {
        // Segment centre in parent fast time fixes the sub-band carrier.
        const double t_mid = p.fast_time(k * seg) +
                             0.5 * static_cast<double>(seg - 1) / p.f_s;
        const double f_ck = p.f_c + p.beta * t_mid;
        const double t_k = chirp_time_for_samples(seg, p.f_s);
        const double b_k = p.beta * t_k;
        SignalCube sub(RadarParams(f_ck, b_k, t_k, p.f_s), cube.track());
        for (std::int64_t eta = 0; eta < cube.n_slow(); ++eta) {
            const cdouble* src = cube.row(eta) + k * seg;
            std::copy(src, src + seg, sub.row(eta));
        }
        split.cubes[static_cast<std::size_t>(k)] = std::move(sub);
    }
    return split;
}

namespace {

std::vector<double> normalized_magnitude(const ComplexImage& img) {
    std::vector<double> v(img.data().size());
    double peak = 0.0;
    for (const cdouble& z : img.data()) {
        peak = std::max(peak, std::abs(z));
    }
    const double scale = peak > 0.0 ? 1.0 / peak : 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = std::abs(img.data()[i]) * scale;
    }
    return v;
}

void percentile_stretch(std::vector<double>& v) {
    std::vector<double> sorted = v;
    const auto nth = [&](double q) {
        const std::size_t idx = static_cast<std::size_t>(
            q * static_cast<double>(sorted.size() - 1) + 0.5);
        std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(idx),
                         sorted.end());
        return sorted[idx];
    };
    const double lo = nth(0.02);
    const double hi = nth(0.98);
    if (!(hi > lo)) {
        return;  // degenerate histogram; leave channel untouched
    }
    const double scale = 1.0 / (hi - lo);
    for (double& x : v) {
        x = std::clamp((x - lo) * scale, 0.0, 1.0);
    }
}

}  // namespace

RgbImage composite_rgb(const ComplexImage& low, const ComplexImage& mid,
                       const ComplexImage& high, bool enhance) {
    if (!(low.grid() == mid.grid()) || !(low.grid() == high.grid())) {
        throw ContractError("sub-band images must share one grid");
    }

    std::array<std::vector<double>, 3> ch = {normalized_magnitude(low),
                                             normalized_magnitude(mid),
                                             normalized_magnitude(high)};
    if (enhance) {
        for (std::vector<double>& c : ch) {
            percentile_stretch(c);
        }
    }

    RgbImage rgb;
    rgb.nx = low.nx();
    rgb.ny = low.ny();
    rgb.data.resize(static_cast<std::size_t>(rgb.nx * rgb.ny * 3));
    for (std::size_t i = 0; i < ch[0].size(); ++i) {
        for (std::size_t c = 0; c < 3; ++c) {
            const double display = 1.0 - ch[c][i];
            rgb.data[3 * i + c] =
                static_cast<std::uint8_t>(std::lround(std::clamp(display, 0.0, 1.0) * 255.0));
        }
    }
    return rgb;
}

}  // namespace wsar
