#include "core/geometry.hpp"

#include <cmath>

namespace wsar {

double slant_range(double x_pc, double x, double y) {
    const double dx = x - x_pc;
    return std::sqrt(dx * dx + y * y);
}

double slant_range(const ApertureTrack& track, std::int64_t eta, double x, double y) {
    return slant_range(track.x(eta), x, y);
}

double theoretical_range_resolution(const RadarParams& params) {
    if (!(params.b > 0.0)) {
        throw ContractError("bandwidth must be positive");
    }
    return kSpeedOfLight / (2.0 * params.b);
}

double theoretical_xrange_resolution(const RadarParams& params, double aperture_length,
                                     double scene_range) {
    if (!(aperture_length > 0.0) || !(scene_range > 0.0)) {
        throw ContractError("aperture length and scene range must be positive");
    }
    return params.wavelength() * scene_range / (2.0 * aperture_length);
}

}  // namespace wsar
