#pragma once

#include <vector>

#include "core/types.hpp"

namespace wsar {

/// Scene and receiver description for beat-signal synthesis.
struct SimulationSpec {
    RadarParams params;
    ApertureTrack track;
    std::vector<PointTarget> scene;
    double noise_sigma = 0.0;    // std of the complex beat-domain noise per sample
    std::uint64_t rng_seed = 0;
    double antenna_q = 0.0;      // cos^q two-way pattern exponent; 0 = isotropic

    void validate() const;
};

// Synthesizes the dechirped beat cube: for every slow-time position and
// fast-time sample, the coherent sum of per-target returns
//   sigma_l(f) * exp(j * 4*pi/c * (f_c + beta*t) * R_l(eta))
// plus circular complex receiver noise. Rows are independent and the noise
// stream is derived per row, so the result does not depend on worker count.
SignalCube simulate(const SimulationSpec& spec);

// Returns cube + i.i.d. circular complex gaussian noise; deterministic for a
// fixed seed, bit-identical to the input when sigma == 0.
SignalCube add_noise(const SignalCube& cube, double sigma, std::uint64_t seed);

}  // namespace wsar
