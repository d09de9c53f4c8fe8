#include "core/types.hpp"

#include <cmath>
#include <limits>

namespace wsar {

const char* window_name(Window w) {
    switch (w) {
        case Window::kRectangular:
            return "rect";
        case Window::kHamming:
            return "hamming";
    }
    return "unknown";
}

RadarParams::RadarParams(double f_c_, double b_, double T_, double f_s_)
    : f_c(f_c_), b(b_), T(T_), f_s(f_s_), beta(b_ / T_) {
    validate();
}

void RadarParams::validate() const {
    if (!(f_c > 0.0) || !(b > 0.0) || !(T > 0.0) || !(f_s > 0.0)) {
        throw ContractError("radar parameters must be positive (f_c, b, T, f_s)");
    }
    if (beta != b / T) {
        throw ContractError("chirp slope beta must equal b/T");
    }
    if (n_fast() < 8) {
        throw ContractError("fewer than 8 fast-time samples (f_s*T too small)");
    }
}

void PointTarget::validate() const {
    if (!std::isfinite(sigma.real()) || !std::isfinite(sigma.imag())) {
        throw ContractError("target reflectivity must be finite");
    }
    if (!(y > 0.0)) {
        throw ContractError("target must lie in front of the aperture line (y > 0)");
    }
}

ApertureTrack::ApertureTrack(double start_x, double spacing, std::int64_t count)
    : spacing_(spacing) {
    if (count < 1) {
        throw ContractError("aperture track needs at least one position");
    }
    if (count > 1 && !(spacing > 0.0)) {
        throw ContractError("aperture spacing must be positive");
    }
    x_.resize(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) {
        x_[static_cast<std::size_t>(k)] = start_x + static_cast<double>(k) * spacing;
    }
    validate();
}

double ApertureTrack::x(std::int64_t eta) const {
    if (eta < 0 || eta >= size()) {
        throw ContractError("slow-time index out of bounds");
    }
    return x_[static_cast<std::size_t>(eta)];
}

void ApertureTrack::validate() const {
    for (std::size_t k = 1; k < x_.size(); ++k) {
        if (!(x_[k] > x_[k - 1])) {
            throw ContractError("track positions must be strictly increasing");
        }
        if (std::abs(x_[k] - x_[k - 1] - spacing_) >= 1e-12) {
            throw ContractError("track spacing must be uniform to 1e-12 m");
        }
    }
}

void ImageGrid::validate() const {
    if (nx < 1 || ny < 1) {
        throw ContractError("image grid must have at least one pixel per axis");
    }
    if (!(dx > 0.0) || !(dy > 0.0)) {
        throw ContractError("grid spacing must be positive");
    }
    if (!(y0 > 0.0)) {
        throw ContractError("grid must lie in front of the aperture line (y > 0)");
    }
}

SignalCube::SignalCube(RadarParams params, ApertureTrack track)
    : params_(params), track_(std::move(track)), n_fast_(params.n_fast()) {
    params_.validate();
    track_.validate();
    data_.assign(static_cast<std::size_t>(track_.size() * n_fast_), cdouble{0.0, 0.0});
}

RangeProfileCube::RangeProfileCube(RadarParams params, ApertureTrack track, Window window,
                                   int pad_factor)
    : params_(params), track_(std::move(track)), window_(window), pad_(pad_factor) {
    if (pad_factor != 1 && pad_factor != 2 && pad_factor != 4 && pad_factor != 8) {
        throw ContractError("pad factor must be one of 1, 2, 4, 8");
    }
    n_bins_ = params_.n_fast() * pad_factor;
    data_.assign(static_cast<std::size_t>(track_.size() * n_bins_), cdouble{0.0, 0.0});
}

ComplexImage::ComplexImage(ImageGrid grid) : grid_(grid) {
    grid_.validate();
    data_.assign(static_cast<std::size_t>(grid_.size()), cdouble{0.0, 0.0});
}

}  // namespace wsar
