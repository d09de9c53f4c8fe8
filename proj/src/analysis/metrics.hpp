#pragma once

#include <vector>

#include "core/types.hpp"

namespace wsar {

/// Lobe geometry of a 1D power cut.
struct CutMetrics {
    std::int64_t peak = 0;
    double width_3db = 0.0;       // sample units, interpolated on power
    std::int64_t lobe_lo = 0;     // main-lobe extent (first turning points)
    std::int64_t lobe_hi = 0;
    double psl_db = 0.0;          // largest local max outside the main lobe
};

CutMetrics measure_power_cut(const std::vector<double>& power);

/// Point-response numbers of a focused image around its global peak.
struct ImagePsfMetrics {
    std::int64_t peak_ix = 0;
    std::int64_t peak_iy = 0;
    double peak_x = 0.0;          // m
    double peak_y = 0.0;          // m
    double peak_db = 0.0;         // 20 log10 |peak|
    double range_width_m = 0.0;   // -3 dB width along range through the peak
    double xrange_width_m = 0.0;  // -3 dB width along cross-range
    double psl_db = 0.0;          // worst side-lobe anywhere outside the main-lobe box
    double islr_db = 0.0;         // energy outside / inside the main-lobe box
};

ImagePsfMetrics image_psf_metrics(const ComplexImage& img);

}  // namespace wsar
