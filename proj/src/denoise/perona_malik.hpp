#pragma once

#include "core/types.hpp"

namespace wsar {

/// Nonlinear-diffusion parameters. dt must respect the explicit-scheme
/// stability bound for the 4-neighbour stencil (dt <= 0.25).
struct DenoiseParams {
    double k = 5.0;        // edge-sensitivity threshold, in field units
    double sigma_g = 1.0;  // std of the Gaussian that smooths the gradient, pixels
    double dt = 0.2;       // time step
    int n_steps = 50;

    void validate() const;
};

// Edge-preserving smoothing: n_steps explicit updates of
//   u <- u + dt * div( c(|grad(G_sigma * u)|^2) * grad u ),
// with conductance c(g) = exp(-g/k^2) sampled at half-grid midpoints and
// mirror (Neumann) boundaries. The scheme is conservative: the field sum is
// exact up to rounding, and min/max never expand.
Field2D perona_malik(const Field2D& field, const DenoiseParams& params);

// Peak-normalized dB magnitude clipped below at -floor_db.
Field2D to_db_magnitude(const ComplexImage& img, double floor_db);

}  // namespace wsar
