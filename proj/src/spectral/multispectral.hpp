#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace wsar {

/// Three equal fast-time segments of a beat cube. Segment k spans sweep
/// frequencies [f_start + k*b/3, f_start + (k+1)*b/3]; its params carry the
/// segment's own centre carrier and bandwidth, so the usual compress +
/// back-project chain focuses each sub-band without special cases.
struct SubbandSplit {
    std::array<SignalCube, 3> cubes;
    std::int64_t segment_length = 0;  // fast-time samples per segment
    std::int64_t remainder = 0;       // trailing samples dropped (< 3)
};

SubbandSplit split_subbands(const SignalCube& cube);

/// 8-bit RGB raster, row-major, 3 bytes per pixel.
struct RgbImage {
    std::int64_t nx = 0;
    std::int64_t ny = 0;
    std::vector<std::uint8_t> data;
};

// False-colour composite of three sub-band images (low band -> red,
// mid -> green, high -> blue). Each channel is normalized by its own peak
// magnitude, optionally contrast-stretched between its 2nd and 98th
// percentiles, and displayed inverted (1 - value), so a frequency-flat
// scatterer comes out near black on a white background.
RgbImage composite_rgb(const ComplexImage& low, const ComplexImage& mid,
                       const ComplexImage& high, bool enhance);

}  // namespace wsar
