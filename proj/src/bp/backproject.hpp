#pragma once

#include "core/types.hpp"

namespace wsar {

// Pixel-domain image formation: coherent sum over the aperture of the range
// profile interpolated at each pixel's beat frequency, phase-compensated with
// the carrier kernel exp(-j 4 pi f_c R / c). An optional window across the
// aperture tapers the cross-range response. Pixels whose beat frequency falls
// outside the one-sided profile support contribute zero.
ComplexImage backproject(const RangeProfileCube& profiles, const ImageGrid& grid,
                         Window azimuth_window = Window::kRectangular);

// Brute-force time-domain matched filter, the oracle for the fast path:
// image[i] = sum_eta sum_k s(eta,k) * conj(unit-target model at pixel i).
// Quadratic cost; restricted to grids of at most 64x64.
ComplexImage backproject_reference(const SignalCube& cube, const ImageGrid& grid);

}  // namespace wsar
