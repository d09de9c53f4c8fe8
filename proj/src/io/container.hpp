#pragma once

#include <string>

#include "core/types.hpp"

namespace wsar {

// Binary containers, little-endian throughout.
//
// WSAR (beat cube):   magic "WSAR", u32 version, u64 n_slow, u64 n_fast,
//                     f64 f_c, b, T, f_s, f64 track start, spacing, then
//                     n_slow*n_fast (re, im) f64 pairs, slow-time major.
// WPRF (profiles):    magic "WPRF", u32 version, u64 n_slow, u64 n_bins,
//                     u32 window, u32 pad, f64 f_c, b, T, f_s, f64 track
//                     start, spacing, f64 coherent gain, data pairs.
// WIMG (image):       magic "WIMG", u32 version, u64 n_range, u64 n_xrange,
//                     f64 x0, y0, dx, dy, u32 range window, u32 azimuth
//                     window, f64 look gain, data pairs row-major.
//
// write -> read -> write reproduces identical bytes.

void write_cube(const SignalCube& cube, const std::string& path);
SignalCube read_cube(const std::string& path);

void write_profiles(const RangeProfileCube& profiles, const std::string& path);
RangeProfileCube read_profiles(const std::string& path);

void write_image(const ComplexImage& img, const std::string& path);
ComplexImage read_image(const std::string& path);

}  // namespace wsar
