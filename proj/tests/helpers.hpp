#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "core/rng.hpp"
#include "core/types.hpp"
#include "sim/simulate.hpp"

namespace wsar::test {

// Small default scene used across suites: W-band chirp scaled down in sample
// count so single-core runs stay fast.
inline RadarParams small_params() {
    // 6 GHz sweep, 512 fast-time samples.
    return RadarParams(90e9, 6e9, 256e-6, 2e6);
}

inline ApertureTrack small_track(std::int64_t count = 64) {
    const double spacing = kSpeedOfLight / 90e9 / 4.0;  // lambda/4
    const double start = -0.5 * spacing * static_cast<double>(count - 1);
    return ApertureTrack(start, spacing, count);
}

inline SimulationSpec single_target_spec(double x = 0.0, double y = 2.05,
                                         cdouble sigma = {1.0, 0.0}) {
    SimulationSpec spec;
    spec.params = small_params();
    spec.track = small_track();
    spec.scene.push_back({sigma, x, y, 0.0});
    return spec;
}

inline double max_abs(const std::vector<cdouble>& v) {
    double m = 0.0;
    for (const cdouble& z : v) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

inline double max_abs_diff(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace wsar::test
