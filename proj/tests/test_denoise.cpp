#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/rng.hpp"
#include "denoise/perona_malik.hpp"

using namespace wsar;

namespace {

double field_sum(const Field2D& f) {
    return std::accumulate(f.data().begin(), f.data().end(), 0.0);
}

double region_std(const Field2D& f, std::int64_t x0, std::int64_t x1, std::int64_t y0,
                  std::int64_t y1) {
    double sum = 0.0;
    double sq = 0.0;
    std::int64_t n = 0;
    for (std::int64_t iy = y0; iy <= y1; ++iy) {
        for (std::int64_t ix = x0; ix <= x1; ++ix) {
            sum += f.at(iy, ix);
            sq += f.at(iy, ix) * f.at(iy, ix);
            ++n;
        }
    }
    const double mean = sum / static_cast<double>(n);
    return std::sqrt(std::max(0.0, sq / static_cast<double>(n) - mean * mean));
}

// 0 dB | 50 dB vertical step at column edge_col, plus seeded noise.
Field2D step_phantom(std::int64_t ny, std::int64_t nx, std::int64_t edge_col,
                     double noise_std, std::uint64_t seed) {
    Field2D f(ny, nx);
    Rng rng(seed);
    for (std::int64_t iy = 0; iy < ny; ++iy) {
        for (std::int64_t ix = 0; ix < nx; ++ix) {
            f.at(iy, ix) = (ix >= edge_col ? 50.0 : 0.0) + noise_std * rng.gaussian();
        }
    }
    return f;
}

std::int64_t max_gradient_column(const Field2D& f, std::int64_t row) {
    std::int64_t best = 0;
    double g_best = -1.0;
    for (std::int64_t ix = 0; ix + 1 < f.nx(); ++ix) {
        const double g = std::abs(f.at(row, ix + 1) - f.at(row, ix));
        if (g > g_best) {
            g_best = g;
            best = ix;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("constant fields are exact fixed points") {
    Field2D f(17, 23, 4.2);
    DenoiseParams p;
    p.n_steps = 25;
    const Field2D out = perona_malik(f, p);
    for (std::size_t i = 0; i < out.data().size(); ++i) {
        CHECK(out.data()[i] == 4.2);
    }
}

TEST_CASE("large K reduces one step to linear diffusion") {
    Field2D f(12, 15);
    Rng rng(5);
    for (double& v : f.data()) {
        v = 10.0 * rng.gaussian();
    }
    DenoiseParams p;
    p.k = 1e12;
    p.dt = 0.2;
    p.n_steps = 1;
    const Field2D out = perona_malik(f, p);

    // Independent heat step with unit conductance and Neumann borders.
    const auto at = [&](std::int64_t iy, std::int64_t ix) { return f.at(iy, ix); };
    double worst = 0.0;
    for (std::int64_t iy = 0; iy < f.ny(); ++iy) {
        for (std::int64_t ix = 0; ix < f.nx(); ++ix) {
            double div = 0.0;
            if (ix + 1 < f.nx()) div += at(iy, ix + 1) - at(iy, ix);
            if (ix > 0) div -= at(iy, ix) - at(iy, ix - 1);
            if (iy + 1 < f.ny()) div += at(iy + 1, ix) - at(iy, ix);
            if (iy > 0) div -= at(iy, ix) - at(iy - 1, ix);
            worst = std::max(worst, std::abs(out.at(iy, ix) - (at(iy, ix) + p.dt * div)));
        }
    }
    CHECK(worst < 1e-9);
    CHECK(field_sum(out) == doctest::Approx(field_sum(f)).epsilon(1e-9));
}

TEST_CASE("maximum principle and exact conservation over 100 steps") {
    Field2D f(24, 31);
    Rng rng(17);
    for (double& v : f.data()) {
        v = 25.0 + 25.0 * std::sin(rng.gaussian());
    }
    const double lo = *std::min_element(f.data().begin(), f.data().end());
    const double hi = *std::max_element(f.data().begin(), f.data().end());
    const double total = field_sum(f);

    DenoiseParams p;
    p.k = 8.0;
    p.dt = 0.25;
    p.n_steps = 100;
    const Field2D out = perona_malik(f, p);

    for (const double v : out.data()) {
        CHECK(v >= lo - 1e-9);
        CHECK(v <= hi + 1e-9);
    }
    CHECK(std::abs(field_sum(out) - total) <= 1e-7 * std::abs(total));
}

TEST_CASE("flat-region variance never increases") {
    Field2D f(20, 20);
    Rng rng(23);
    for (double& v : f.data()) {
        v = 3.0 * rng.gaussian();
    }
    DenoiseParams p;
    p.n_steps = 1;
    double prev = region_std(f, 2, 17, 2, 17);
    Field2D cur = f;
    for (int step = 0; step < 20; ++step) {
        cur = perona_malik(cur, p);
        const double now = region_std(cur, 2, 17, 2, 17);
        CHECK(now <= prev + 1e-12);
        prev = now;
    }
}

TEST_CASE("step-edge phantom: noise crushed, edge pinned") {
    const std::int64_t ny = 64;
    const std::int64_t nx = 96;
    const std::int64_t edge = 48;
    const Field2D noisy = step_phantom(ny, nx, edge, 3.0, 2026);

    DenoiseParams p;  // K=5, sigma_g=1, dt=0.2, 50 steps
    const Field2D out = perona_malik(noisy, p);

    const double std_before = region_std(noisy, 6, 36, 6, ny - 7);
    const double std_after = region_std(out, 6, 36, 6, ny - 7);
    CHECK(std_before / std_after >= 3.0);

    // The strongest gradient stays on the original edge column (+-1 px).
    for (std::int64_t row = 4; row < ny - 4; row += 7) {
        const std::int64_t col = max_gradient_column(out, row);
        CHECK(std::abs(col - (edge - 1)) <= 1);
    }
}

TEST_CASE("parameter and input guards") {
    Field2D f(8, 8, 1.0);
    DenoiseParams p;
    p.dt = 0.3;
    CHECK_THROWS_AS(perona_malik(f, p), ContractError);
    p = DenoiseParams{};
    p.k = 0.0;
    CHECK_THROWS_AS(perona_malik(f, p), ContractError);
    p = DenoiseParams{};
    p.n_steps = 0;
    CHECK_THROWS_AS(perona_malik(f, p), ContractError);

    f.at(3, 3) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(perona_malik(f, DenoiseParams{}), ContractError);
}

TEST_CASE("dB magnitude conversion") {
    ImageGrid grid{0.0, 1.0, 1e-3, 1e-3, 2, 2};
    ComplexImage img(grid);
    img.at(0, 0) = {2.0, 0.0};
    img.at(0, 1) = {0.0, 1.0};   // half magnitude -> -6.02 dB
    img.at(1, 0) = {2e-6, 0.0};  // below the floor -> clipped
    img.at(1, 1) = {0.0, 0.0};   // zero -> clipped

    const Field2D db = to_db_magnitude(img, 50.0);
    CHECK(db.at(0, 0) == 0.0);
    CHECK(db.at(0, 1) == doctest::Approx(-6.0206).epsilon(1e-4));
    CHECK(db.at(1, 0) == -50.0);
    CHECK(db.at(1, 1) == -50.0);

    const ComplexImage zeros(grid);
    CHECK_THROWS_AS(to_db_magnitude(zeros, 50.0), ContractError);
    CHECK_THROWS_AS(to_db_magnitude(img, 0.0), ContractError);
}
