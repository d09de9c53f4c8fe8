#pragma once

#include <span>
#include <vector>

#include "core/types.hpp"

namespace wsar {

// Window taps, symmetric definition (Hamming: 0.54 - 0.46 cos(2 pi k/(N-1))).
std::vector<double> make_window(Window window, std::int64_t n);

// Mean tap value: peak scale of an on-bin tone relative to rectangular.
double window_coherent_gain(Window window, std::int64_t n);

// Fast-time window + zero-pad + FFT per slow-time row. Output profiles are
// derotated so that a scatterer's peak phase equals its carrier phase (the
// linear phase from the sample centroid (N-1)/2 is removed).
RangeProfileCube range_compress(const SignalCube& cube, Window window, int pad_factor);

struct ProfileMetrics {
    std::int64_t peak_bin = 0;
    double peak_db = 0.0;            // 20 log10 |peak|
    double width_3db_bins = 0.0;     // -3 dB width, padded-bin units
    double peak_sidelobe_db = 0.0;   // relative to the peak; -inf when no sidelobe
};

// Peak/width/side-lobe numbers for one profile row. The -3 dB width is read
// from linear interpolation of |.|^2 around the peak; the side-lobe search
// starts past the first turning point on each side of the main lobe.
ProfileMetrics profile_metrics(std::span<const cdouble> row);

}  // namespace wsar
