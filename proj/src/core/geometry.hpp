#pragma once

#include "core/types.hpp"

namespace wsar {

// One-way slant range from a phase centre at (x_pc, 0) to a point (x, y).
double slant_range(double x_pc, double x, double y);

// Slant range from track position eta to a scene point. Throws on a bad index.
double slant_range(const ApertureTrack& track, std::int64_t eta, double x, double y);

// c / (2b): bandwidth-limited range resolution.
double theoretical_range_resolution(const RadarParams& params);

// lambda * R / (2L): aperture-limited cross-range resolution at range R
// for aperture length L.
double theoretical_xrange_resolution(const RadarParams& params, double aperture_length,
                                     double scene_range);

}  // namespace wsar
