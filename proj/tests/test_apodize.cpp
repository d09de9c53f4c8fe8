#include "doctest.h"

#include <cmath>

#include "apod/apodize.hpp"
#include "analysis/metrics.hpp"
#include "bp/backproject.hpp"
#include "core/rng.hpp"
#include "helpers.hpp"
#include "rc/range_compress.hpp"
#include "sim/simulate.hpp"

using namespace wsar;
using namespace wsar::test;

namespace {

ComplexImage make_look(const ImageGrid& grid, Window range_w, Window az_w, double gain) {
    ComplexImage img(grid);
    img.set_look(range_w, az_w, gain);
    return img;
}

const ImageGrid kGrid{-0.01, 2.0, 1e-3, 1e-3, 4, 3};

}  // namespace

TEST_CASE("dual apodization keeps the smaller magnitude and the rect phase") {
    ComplexImage rect = make_look(kGrid, Window::kRectangular, Window::kRectangular, 1.0);
    ComplexImage ham = make_look(kGrid, Window::kHamming, Window::kHamming, 0.54);

    rect.at(0, 0) = std::polar(1.0, 0.3);
    ham.at(0, 0) = std::polar(0.54, -1.2);  // normalized magnitude 1.0 -> rect wins ties
    rect.at(0, 1) = std::polar(0.8, -0.4);
    ham.at(0, 1) = std::polar(0.54 * 0.1, 2.0);  // normalized 0.1 -> take the null-ish value
    rect.at(1, 2) = {0.0, 0.0};
    ham.at(1, 2) = std::polar(0.54 * 0.7, 0.1);

    const ComplexImage out = dual_apodization(rect, ham);
    CHECK(std::abs(out.at(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::arg(out.at(0, 0)) == doctest::Approx(0.3));
    CHECK(std::abs(out.at(0, 1)) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(std::arg(out.at(0, 1)) == doctest::Approx(-0.4));
    CHECK(std::abs(out.at(1, 2)) == 0.0);
}

TEST_CASE("equal looks are a fixed point of dual apodization") {
    ComplexImage rect = make_look(kGrid, Window::kRectangular, Window::kRectangular, 1.0);
    ComplexImage ham = make_look(kGrid, Window::kHamming, Window::kHamming, 0.54);
    Rng rng(3);
    for (std::int64_t i = 0; i < kGrid.size(); ++i) {
        const cdouble v{rng.gaussian(), rng.gaussian()};
        rect.data()[static_cast<std::size_t>(i)] = v;
        ham.data()[static_cast<std::size_t>(i)] = v * 0.54;
    }
    const ComplexImage out = dual_apodization(rect, ham);
    for (std::int64_t i = 0; i < kGrid.size(); ++i) {
        CHECK(std::abs(out.data()[static_cast<std::size_t>(i)] -
                       rect.data()[static_cast<std::size_t>(i)]) <= 1e-12);
    }
}

TEST_CASE("apodization look pairing is checked") {
    const ComplexImage rect = make_look(kGrid, Window::kRectangular, Window::kRectangular, 1.0);
    const ComplexImage ham = make_look(kGrid, Window::kHamming, Window::kHamming, 0.54);

    ImageGrid other = kGrid;
    other.nx = 5;
    const ComplexImage wrong_grid = make_look(other, Window::kHamming, Window::kHamming, 0.54);
    CHECK_THROWS_AS(dual_apodization(rect, wrong_grid), ContractError);

    const ComplexImage not_ham = make_look(kGrid, Window::kRectangular, Window::kHamming, 0.54);
    CHECK_THROWS_AS(dual_apodization(rect, not_ham), ContractError);
    CHECK_THROWS_AS(complex_dual_apodization(ham, ham), ContractError);
}

TEST_CASE("complex dual apodization component rules") {
    ComplexImage rect = make_look(kGrid, Window::kRectangular, Window::kRectangular, 1.0);
    ComplexImage ham = make_look(kGrid, Window::kHamming, Window::kHamming, 1.0);

    rect.at(0, 0) = {0.8, -0.5};
    ham.at(0, 0) = {0.3, -0.9};  // same signs: take the smaller magnitudes
    rect.at(0, 1) = {0.2, 0.4};
    ham.at(0, 1) = {-0.1, 0.6};  // real parts disagree in sign: zero the real part

    const ComplexImage out = complex_dual_apodization(rect, ham);
    CHECK(out.at(0, 0).real() == doctest::Approx(0.3));
    CHECK(out.at(0, 0).imag() == doctest::Approx(-0.5));
    CHECK(out.at(0, 1).real() == 0.0);
    CHECK(out.at(0, 1).imag() == doctest::Approx(0.4));
}

TEST_CASE("CDA never exceeds DA in magnitude") {
    ComplexImage rect = make_look(kGrid, Window::kRectangular, Window::kRectangular, 1.0);
    ComplexImage ham = make_look(kGrid, Window::kHamming, Window::kHamming, 0.54);
    Rng rng(91);
    for (std::int64_t i = 0; i < kGrid.size(); ++i) {
        rect.data()[static_cast<std::size_t>(i)] = {rng.gaussian(), rng.gaussian()};
        ham.data()[static_cast<std::size_t>(i)] = {0.54 * rng.gaussian(),
                                                   0.54 * rng.gaussian()};
    }
    const ComplexImage da = dual_apodization(rect, ham);
    const ComplexImage cda = complex_dual_apodization(rect, ham);
    for (std::int64_t i = 0; i < kGrid.size(); ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        CHECK(std::abs(cda.data()[k]) <= std::abs(da.data()[k]) + 1e-12);
        // Neither output exceeds the smaller look magnitude.
        const double cap = std::min(std::abs(rect.data()[k]),
                                    std::abs(ham.data()[k]) / 0.54) + 1e-12;
        CHECK(std::abs(da.data()[k]) <= cap);
        CHECK(std::abs(cda.data()[k]) <= cap);
    }
}

TEST_CASE("point-target looks: main lobe preserved, side-lobes tapered") {
    SimulationSpec spec = single_target_spec();
    const SignalCube cube = simulate(spec);
    const RangeProfileCube prof_r = range_compress(cube, Window::kRectangular, 8);
    const RangeProfileCube prof_h = range_compress(cube, Window::kHamming, 8);
    const ImageGrid grid{-0.24, 1.975, 6e-3, 2.5e-3, 81, 61};
    const ComplexImage rect = backproject(prof_r, grid, Window::kRectangular);
    const ComplexImage ham = backproject(prof_h, grid, Window::kHamming);

    const ComplexImage da = dual_apodization(rect, ham);
    const ComplexImage cda = complex_dual_apodization(rect, ham);

    const ImagePsfMetrics mr = image_psf_metrics(rect);
    const ImagePsfMetrics mh = image_psf_metrics(ham);
    const ImagePsfMetrics md = image_psf_metrics(da);
    const ImagePsfMetrics mc = image_psf_metrics(cda);

    // Same resolution as the rectangular look on both axes.
    CHECK(md.range_width_m == doctest::Approx(mr.range_width_m).epsilon(0.05));
    CHECK(md.xrange_width_m == doctest::Approx(mr.xrange_width_m).epsilon(0.05));

    // Side-lobes at or below the Hamming level (+0.5 dB slack).
    CHECK(md.psl_db <= mh.psl_db + 0.5);
    CHECK(mc.psl_db <= md.psl_db + 0.5);

    // CDA bounded by DA pointwise, and strictly better integrated.
    for (std::size_t i = 0; i < da.data().size(); ++i) {
        CHECK(std::abs(cda.data()[i]) <= std::abs(da.data()[i]) + 1e-12);
    }
    CHECK(mc.islr_db < md.islr_db);

    // Peak pixels agree between DA and CDA within 1%.
    const double peak_da = std::pow(10.0, md.peak_db / 20.0);
    const double peak_cda = std::pow(10.0, mc.peak_db / 20.0);
    CHECK(peak_cda == doctest::Approx(peak_da).epsilon(0.01));
}
