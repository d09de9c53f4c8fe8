#include "analysis/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wsar {

CutMetrics measure_power_cut(const std::vector<double>& power) {
    const std::int64_t n = static_cast<std::int64_t>(power.size());
    if (n == 0) {
        throw ContractError("empty cut");
    }
    CutMetrics m;
    for (std::int64_t i = 1; i < n; ++i) {
        if (power[static_cast<std::size_t>(i)] > power[static_cast<std::size_t>(m.peak)]) {
            m.peak = i;
        }
    }
    const double p_peak = power[static_cast<std::size_t>(m.peak)];
    if (p_peak <= 0.0) {
        throw ContractError("all-zero cut");
    }

    const double half = 0.5 * p_peak;
    double left = static_cast<double>(m.peak);
    for (std::int64_t i = m.peak; i > 0; --i) {
        const double pi = power[static_cast<std::size_t>(i)];
        const double pn = power[static_cast<std::size_t>(i - 1)];
        if (pn <= half) {
            left = static_cast<double>(m.peak - i) + (pi - half) / (pi - pn);
            break;
        }
    }
    double right = static_cast<double>(n - 1 - m.peak);
    for (std::int64_t i = m.peak; i < n - 1; ++i) {
        const double pi = power[static_cast<std::size_t>(i)];
        const double pn = power[static_cast<std::size_t>(i + 1)];
        if (pn <= half) {
            right = static_cast<double>(i - m.peak) + (pi - half) / (pi - pn);
            break;
        }
    }
    m.width_3db = left + right;

    m.lobe_lo = m.peak;
    while (m.lobe_lo > 0 && power[static_cast<std::size_t>(m.lobe_lo - 1)] <
                                power[static_cast<std::size_t>(m.lobe_lo)]) {
        --m.lobe_lo;
    }
    m.lobe_hi = m.peak;
    while (m.lobe_hi < n - 1 && power[static_cast<std::size_t>(m.lobe_hi + 1)] <
                                    power[static_cast<std::size_t>(m.lobe_hi)]) {
        ++m.lobe_hi;
    }
    double p_side = 0.0;
    for (std::int64_t i = 0; i < m.lobe_lo; ++i) {
        p_side = std::max(p_side, power[static_cast<std::size_t>(i)]);
    }
    for (std::int64_t i = m.lobe_hi + 1; i < n; ++i) {
        p_side = std::max(p_side, power[static_cast<std::size_t>(i)]);
    }
    m.psl_db = p_side > 0.0 ? 10.0 * std::log10(p_side / p_peak)
                            : -std::numeric_limits<double>::infinity();
    return m;
}

ImagePsfMetrics image_psf_metrics(const ComplexImage& img) {
    const ImageGrid& g = img.grid();
    std::int64_t peak_idx = 0;
    double p_peak = 0.0;
    for (std::int64_t i = 0; i < g.size(); ++i) {
        const double p = std::norm(img.data()[static_cast<std::size_t>(i)]);
        if (p > p_peak) {
            p_peak = p;
            peak_idx = i;
        }
    }
    if (p_peak <= 0.0) {
        throw ContractError("all-zero image");
    }

    ImagePsfMetrics m;
    m.peak_iy = peak_idx / g.nx;
    m.peak_ix = peak_idx % g.nx;
    m.peak_x = g.x_at(m.peak_ix);
    m.peak_y = g.y_at(m.peak_iy);
    m.peak_db = 10.0 * std::log10(p_peak);

    std::vector<double> range_cut(static_cast<std::size_t>(g.ny));
    for (std::int64_t iy = 0; iy < g.ny; ++iy) {
        range_cut[static_cast<std::size_t>(iy)] = std::norm(img.at(iy, m.peak_ix));
    }
    std::vector<double> xrange_cut(static_cast<std::size_t>(g.nx));
    for (std::int64_t ix = 0; ix < g.nx; ++ix) {
        xrange_cut[static_cast<std::size_t>(ix)] = std::norm(img.at(m.peak_iy, ix));
    }
    const CutMetrics rc = measure_power_cut(range_cut);
    const CutMetrics xc = measure_power_cut(xrange_cut);
    m.range_width_m = rc.width_3db * g.dy;
    m.xrange_width_m = xc.width_3db * g.dx;

    // Main-lobe box from the two cuts' null-to-null extents.
    double p_side = 0.0;
    double e_in = 0.0;
    double e_out = 0.0;
    for (std::int64_t iy = 0; iy < g.ny; ++iy) {
        for (std::int64_t ix = 0; ix < g.nx; ++ix) {
            const double p = std::norm(img.at(iy, ix));
            const bool inside = iy >= rc.lobe_lo && iy <= rc.lobe_hi &&
                                ix >= xc.lobe_lo && ix <= xc.lobe_hi;
            if (inside) {
                e_in += p;
            } else {
                e_out += p;
                p_side = std::max(p_side, p);
            }
        }
    }
    m.psl_db = p_side > 0.0 ? 10.0 * std::log10(p_side / p_peak)
                            : -std::numeric_limits<double>::infinity();
    m.islr_db = e_out > 0.0 && e_in > 0.0 ? 10.0 * std::log10(e_out / e_in)
                                          : -std::numeric_limits<double>::infinity();
    return m;
}

}  // namespace wsar
