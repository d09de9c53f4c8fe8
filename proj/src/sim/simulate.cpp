#include "sim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/geometry.hpp"
#include "core/rng.hpp"
#include "core/threading.hpp"

namespace wsar {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double max_slant_range(const SimulationSpec& spec, const PointTarget& t) {
    // R is maximal at whichever track end is farthest in cross-range.
    const double r0 = slant_range(spec.track.x(0), t.x, t.y);
    const double r1 = slant_range(spec.track.x(spec.track.size() - 1), t.x, t.y);
    return std::max(r0, r1);
}

}  // namespace

void SimulationSpec::validate() const {
    params.validate();
    track.validate();
    if (!(noise_sigma >= 0.0)) {
        throw ContractError("noise sigma must be non-negative");
    }
    if (!(antenna_q >= 0.0)) {
        throw ContractError("antenna taper exponent must be non-negative");
    }
    for (const PointTarget& t : scene) {
        t.validate();
    }
}

SignalCube simulate(const SimulationSpec& spec) {
    spec.validate();

    const double nyquist = 0.5 * spec.params.f_s;
    for (const PointTarget& t : spec.scene) {
        const double beat = spec.params.beat_frequency(max_slant_range(spec, t));
        if (beat > nyquist) {
            throw ContractError("range exceeds unambiguous window");
        }
    }

    SignalCube cube(spec.params, spec.track);
    const std::int64_t n_slow = cube.n_slow();
    const std::int64_t n_fast = cube.n_fast();
    const RadarParams& p = spec.params;
    const double t0 = p.fast_time(0);
    const double dt = 1.0 / p.f_s;
    const std::uint64_t noise_seed = labeled_seed(spec.rng_seed, "simulate.noise");

#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t eta = 0; eta < n_slow; ++eta) {
        cdouble* out = cube.row(eta);
        const double x_pc = spec.track.x(eta);
        for (const PointTarget& tgt : spec.scene) {
            const double r = slant_range(x_pc, tgt.x, tgt.y);
            cdouble amp = tgt.sigma;
            if (spec.antenna_q > 0.0) {
                amp *= std::pow(tgt.y / r, spec.antenna_q);
            }
            // Phase advances linearly in fast time; a unit-phasor recurrence
            // avoids a sincos per sample. Drift over one row is ~1e-14 rad.
            const double phase0 = kFourPi / kSpeedOfLight * (p.f_c + p.beta * t0) * r;
            const double dphase = kFourPi / kSpeedOfLight * p.beta * r * dt;
            cdouble rot = amp * cdouble{std::cos(phase0), std::sin(phase0)};
            const cdouble step{std::cos(dphase), std::sin(dphase)};
            const double slope0 = 1.0 + tgt.rcs_slope * p.beta * t0;
            const double dslope = tgt.rcs_slope * p.beta * dt;
            double scale = slope0;
            for (std::int64_t k = 0; k < n_fast; ++k) {
                out[k] += rot * scale;
                rot *= step;
                scale += dslope;
            }
        }
        if (spec.noise_sigma > 0.0) {
            Rng rng(mix_seed(noise_seed, static_cast<std::uint64_t>(eta)));
            for (std::int64_t k = 0; k < n_fast; ++k) {
                out[k] += rng.complex_gaussian(spec.noise_sigma);
            }
        }
    }
    return cube;
}

SignalCube add_noise(const SignalCube& cube, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0)) {
        throw ContractError("noise sigma must be non-negative");
    }
    SignalCube out = cube;
    if (sigma == 0.0) {
        return out;
    }
    const std::int64_t n_slow = out.n_slow();
    const std::int64_t n_fast = out.n_fast();

#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t eta = 0; eta < n_slow; ++eta) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(eta)));
        cdouble* row = out.row(eta);
        for (std::int64_t k = 0; k < n_fast; ++k) {
            row[k] += rng.complex_gaussian(sigma);
        }
    }
    return out;
}

}  // namespace wsar
