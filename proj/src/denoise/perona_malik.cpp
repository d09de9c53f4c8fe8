#include "denoise/perona_malik.hpp"

#include <algorithm>
#include <cmath>

#include "core/threading.hpp"

namespace wsar {

void DenoiseParams::validate() const {
    if (!(k > 0.0) || !(sigma_g > 0.0)) {
        throw ContractError("K and sigma_g must be positive");
    }
    if (!(dt > 0.0) || dt > 0.25) {
        throw ContractError("dt must lie in (0, 0.25] for a stable explicit step");
    }
    if (n_steps < 1) {
        throw ContractError("at least one diffusion step required");
    }
}

namespace {

std::vector<double> gaussian_taps(double sigma) {
    const std::int64_t radius = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(3.0 * sigma)));
    std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (std::int64_t i = -radius; i <= radius; ++i) {
        const double v = std::exp(-0.5 * static_cast<double>(i * i) / (sigma * sigma));
        taps[static_cast<std::size_t>(i + radius)] = v;
        sum += v;
    }
    for (double& v : taps) {
        v /= sum;
    }
    return taps;
}

std::int64_t clamp_idx(std::int64_t i, std::int64_t n) {
    return std::clamp<std::int64_t>(i, 0, n - 1);
}

// Separable Gaussian with replicated borders.
Field2D gaussian_smooth(const Field2D& in, const std::vector<double>& taps) {
    const std::int64_t nx = in.nx();
    const std::int64_t ny = in.ny();
    const std::int64_t radius = static_cast<std::int64_t>(taps.size() / 2);
    Field2D tmp(ny, nx);
    Field2D out(ny, nx);

#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t iy = 0; iy < ny; ++iy) {
        for (std::int64_t ix = 0; ix < nx; ++ix) {
            double acc = 0.0;
            for (std::int64_t t = -radius; t <= radius; ++t) {
                acc += taps[static_cast<std::size_t>(t + radius)] *
                       in.at(iy, clamp_idx(ix + t, nx));
            }
            tmp.at(iy, ix) = acc;
        }
    }
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t iy = 0; iy < ny; ++iy) {
        for (std::int64_t ix = 0; ix < nx; ++ix) {
            double acc = 0.0;
            for (std::int64_t t = -radius; t <= radius; ++t) {
                acc += taps[static_cast<std::size_t>(t + radius)] *
                       tmp.at(clamp_idx(iy + t, ny), ix);
            }
            out.at(iy, ix) = acc;
        }
    }
    return out;
}

}  // namespace

Field2D perona_malik(const Field2D& field, const DenoiseParams& params) {
    params.validate();
    if (field.nx() < 1 || field.ny() < 1) {
        throw ContractError("empty field");
    }
    for (const double v : field.data()) {
        if (!std::isfinite(v)) {
            throw ContractError("field must be finite");
        }
    }

    const std::int64_t nx = field.nx();
    const std::int64_t ny = field.ny();
    const std::vector<double> taps = gaussian_taps(params.sigma_g);
    const double inv_k2 = 1.0 / (params.k * params.k);

    Field2D u = field;
    Field2D cond(ny, nx);
    Field2D next(ny, nx);

    for (int step = 0; step < params.n_steps; ++step) {
        const Field2D smooth = gaussian_smooth(u, taps);

        // Conductance from the smoothed gradient magnitude (central
        // differences, replicated borders).
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (std::int64_t iy = 0; iy < ny; ++iy) {
            for (std::int64_t ix = 0; ix < nx; ++ix) {
                const double gx = 0.5 * (smooth.at(iy, clamp_idx(ix + 1, nx)) -
                                         smooth.at(iy, clamp_idx(ix - 1, nx)));
                const double gy = 0.5 * (smooth.at(clamp_idx(iy + 1, ny), ix) -
                                         smooth.at(clamp_idx(iy - 1, ny), ix));
                cond.at(iy, ix) = std::exp(-(gx * gx + gy * gy) * inv_k2);
            }
        }

        // Flux-form update; boundary fluxes vanish (Neumann), so the total
        // field sum telescopes away exactly.
#pragma omp parallel for schedule(static) num_threads(thread_count())
        for (std::int64_t iy = 0; iy < ny; ++iy) {
            for (std::int64_t ix = 0; ix < nx; ++ix) {
                const double uc = u.at(iy, ix);
                const double cc = cond.at(iy, ix);
                double div = 0.0;
                if (ix + 1 < nx) {
                    div += 0.5 * (cc + cond.at(iy, ix + 1)) * (u.at(iy, ix + 1) - uc);
                }
                if (ix > 0) {
                    div -= 0.5 * (cc + cond.at(iy, ix - 1)) * (uc - u.at(iy, ix - 1));
                }
                if (iy + 1 < ny) {
                    div += 0.5 * (cc + cond.at(iy + 1, ix)) * (u.at(iy + 1, ix) - uc);
                }
                if (iy > 0) {
                    div -= 0.5 * (cc + cond.at(iy - 1, ix)) * (uc - u.at(iy - 1, ix));
                }
                next.at(iy, ix) = uc + params.dt * div;
            }
        }
        std::swap(u, next);
    }
    return u;
}

Field2D to_db_magnitude(const ComplexImage& img, double floor_db) {
    if (!(floor_db > 0.0)) {
        throw ContractError("dynamic range must be positive");
    }
    double peak = 0.0;
    for (const cdouble& v : img.data()) {
        peak = std::max(peak, std::norm(v));
    }
    if (peak == 0.0) {
        throw ContractError("all-zero image has no dB representation");
    }
    Field2D out(img.ny(), img.nx());
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t i = 0; i < img.grid().size(); ++i) {
        const double p = std::norm(img.data()[static_cast<std::size_t>(i)]);
        const double db = p > 0.0 ? 10.0 * std::log10(p / peak) : -floor_db;
        out.data()[static_cast<std::size_t>(i)] = std::max(db, -floor_db);
    }
    return out;
}

}  // namespace wsar
