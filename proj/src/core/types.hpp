#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "core/error.hpp"

namespace wsar {

using cdouble = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, vacuum

enum class Window : std::uint32_t {
    kRectangular = 0,
    kHamming = 1,
};

const char* window_name(Window w);

/// Chirp and sampling parameters of the FMCW front end.
///
/// f_c is the reference carrier at the centre of the sweep; the instantaneous
/// transmit frequency is f_c + beta*t with fast time t running symmetrically
/// over [-T/2, T/2). Sample k sits at t = (k - (n_fast-1)/2) / f_s, so the
/// sweep covers [f_c - b/2, f_c + b/2] and a scatterer's compressed peak
/// carries the plain carrier phase 4*pi*f_c*R/c.
struct RadarParams {
    double f_c = 0.0;   // carrier (sweep centre), Hz
    double b = 0.0;     // swept bandwidth, Hz
    double T = 0.0;     // chirp duration, s
    double f_s = 0.0;   // beat-signal sampling rate, Hz
    double beta = 0.0;  // chirp slope b/T, Hz/s (derived, stored)

    RadarParams() = default;
    RadarParams(double f_c_, double b_, double T_, double f_s_);

    std::int64_t n_fast() const { return static_cast<std::int64_t>(f_s * T); }

    double fast_time(std::int64_t k) const {
        return (static_cast<double>(k) - 0.5 * static_cast<double>(n_fast() - 1)) / f_s;
    }

    double wavelength() const { return kSpeedOfLight / f_c; }

    // Beat frequency of a scatterer at slant range r.
    double beat_frequency(double r) const { return 2.0 * r * beta / kSpeedOfLight; }

    void validate() const;
};

/// Ideal point scatterer in the imaged plane.
struct PointTarget {
    cdouble sigma;           // complex reflectivity
    double x = 0.0;          // cross-range, m
    double y = 0.0;          // down-range, m (must be > 0)
    double rcs_slope = 0.0;  // linear magnitude slope per Hz about the sweep centre

    void validate() const;
};

/// Radar phase-centre positions along the scan line y = 0, one per
/// slow-time index, strictly increasing with uniform spacing.
class ApertureTrack {
public:
    ApertureTrack() = default;
    ApertureTrack(double start_x, double spacing, std::int64_t count);

    std::int64_t size() const { return static_cast<std::int64_t>(x_.size()); }
    double x(std::int64_t eta) const;
    double spacing() const { return spacing_; }
    double start() const { return x_.empty() ? 0.0 : x_.front(); }
    double length() const { return x_.empty() ? 0.0 : x_.back() - x_.front(); }
    double center() const { return x_.empty() ? 0.0 : 0.5 * (x_.front() + x_.back()); }
    const std::vector<double>& positions() const { return x_; }

    void validate() const;

private:
    std::vector<double> x_;
    double spacing_ = 0.0;
};

/// Rectangular pixel grid in the imaging plane. x indexes cross-range
/// columns, y indexes down-range rows.
struct ImageGrid {
    double x0 = 0.0;
    double y0 = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    std::int64_t nx = 0;  // cross-range samples per row
    std::int64_t ny = 0;  // range rows

    double x_at(std::int64_t ix) const { return x0 + static_cast<double>(ix) * dx; }
    double y_at(std::int64_t iy) const { return y0 + static_cast<double>(iy) * dy; }
    std::int64_t size() const { return nx * ny; }

    bool operator==(const ImageGrid&) const = default;

    void validate() const;
};

/// Raw beat samples, shape (n_slow, n_fast), slow-time major.
class SignalCube {
public:
    SignalCube() = default;
    SignalCube(RadarParams params, ApertureTrack track);

    const RadarParams& params() const { return params_; }
    const ApertureTrack& track() const { return track_; }
    std::int64_t n_slow() const { return track_.size(); }
    std::int64_t n_fast() const { return n_fast_; }

    cdouble& at(std::int64_t eta, std::int64_t k) { return data_[eta * n_fast_ + k]; }
    const cdouble& at(std::int64_t eta, std::int64_t k) const { return data_[eta * n_fast_ + k]; }
    cdouble* row(std::int64_t eta) { return data_.data() + eta * n_fast_; }
    const cdouble* row(std::int64_t eta) const { return data_.data() + eta * n_fast_; }

    std::vector<cdouble>& data() { return data_; }
    const std::vector<cdouble>& data() const { return data_; }

private:
    RadarParams params_;
    ApertureTrack track_;
    std::int64_t n_fast_ = 0;
    std::vector<cdouble> data_;
};

/// Range-compressed profiles, shape (n_slow, n_bins), n_bins = n_fast * pad.
///
/// Profiles are phase-referenced to the chirp centre: a scatterer's peak
/// phase equals its carrier phase 4*pi*f_c*R/c, so back-projection applies
/// only the conjugate carrier kernel.
class RangeProfileCube {
public:
    RangeProfileCube() = default;
    RangeProfileCube(RadarParams params, ApertureTrack track, Window window, int pad_factor);

    const RadarParams& params() const { return params_; }
    const ApertureTrack& track() const { return track_; }
    Window window() const { return window_; }
    int pad_factor() const { return pad_; }
    double coherent_gain() const { return coherent_gain_; }
    void set_coherent_gain(double g) { coherent_gain_ = g; }

    std::int64_t n_slow() const { return track_.size(); }
    std::int64_t n_bins() const { return n_bins_; }
    std::int64_t n_fast_orig() const { return params_.n_fast(); }

    // Bin <-> physical mappings for the padded FFT grid.
    double bin_to_freq(double bin) const { return bin * params_.f_s / static_cast<double>(n_bins_); }
    double bin_to_range(double bin) const {
        return bin_to_freq(bin) * kSpeedOfLight / (2.0 * params_.beta);
    }
    double range_to_bin(double r) const {
        return params_.beat_frequency(r) * static_cast<double>(n_bins_) / params_.f_s;
    }

    cdouble& at(std::int64_t eta, std::int64_t bin) { return data_[eta * n_bins_ + bin]; }
    const cdouble& at(std::int64_t eta, std::int64_t bin) const { return data_[eta * n_bins_ + bin]; }
    cdouble* row(std::int64_t eta) { return data_.data() + eta * n_bins_; }
    const cdouble* row(std::int64_t eta) const { return data_.data() + eta * n_bins_; }

    std::vector<cdouble>& data() { return data_; }
    const std::vector<cdouble>& data() const { return data_; }

private:
    RadarParams params_;
    ApertureTrack track_;
    Window window_ = Window::kRectangular;
    int pad_ = 1;
    double coherent_gain_ = 1.0;
    std::int64_t n_bins_ = 0;
    std::vector<cdouble> data_;
};

/// Complex reflectivity estimate on an ImageGrid, row-major (range rows).
/// Carries the windows used to form the look so apodization can pair looks.
class ComplexImage {
public:
    ComplexImage() = default;
    explicit ComplexImage(ImageGrid grid);

    const ImageGrid& grid() const { return grid_; }
    std::int64_t nx() const { return grid_.nx; }
    std::int64_t ny() const { return grid_.ny; }

    Window range_window() const { return range_window_; }
    Window azimuth_window() const { return azimuth_window_; }
    double look_gain() const { return look_gain_; }
    void set_look(Window range_w, Window azimuth_w, double gain) {
        range_window_ = range_w;
        azimuth_window_ = azimuth_w;
        look_gain_ = gain;
    }

    cdouble& at(std::int64_t iy, std::int64_t ix) { return data_[iy * grid_.nx + ix]; }
    const cdouble& at(std::int64_t iy, std::int64_t ix) const { return data_[iy * grid_.nx + ix]; }

    std::vector<cdouble>& data() { return data_; }
    const std::vector<cdouble>& data() const { return data_; }

private:
    ImageGrid grid_;
    Window range_window_ = Window::kRectangular;
    Window azimuth_window_ = Window::kRectangular;
    double look_gain_ = 1.0;  // peak scale relative to an unwindowed look
    std::vector<cdouble> data_;
};

/// Real scalar field on an image grid (dB magnitude images and the like).
class Field2D {
public:
    Field2D() = default;
    Field2D(std::int64_t ny, std::int64_t nx, double fill = 0.0)
        : nx_(nx), ny_(ny), data_(static_cast<std::size_t>(nx * ny), fill) {}

    std::int64_t nx() const { return nx_; }
    std::int64_t ny() const { return ny_; }

    double& at(std::int64_t iy, std::int64_t ix) { return data_[iy * nx_ + ix]; }
    const double& at(std::int64_t iy, std::int64_t ix) const { return data_[iy * nx_ + ix]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

private:
    std::int64_t nx_ = 0;
    std::int64_t ny_ = 0;
    std::vector<double> data_;
};

}  // namespace wsar
