#include "apod/apodize.hpp"

#include <cmath>

#include "core/threading.hpp"

namespace wsar {

namespace {

void check_looks(const ComplexImage& rect_look, const ComplexImage& ham_look) {
    if (!(rect_look.grid() == ham_look.grid())) {
        throw ContractError("apodization looks must share one grid");
    }
    if (rect_look.range_window() != Window::kRectangular ||
        rect_look.azimuth_window() != Window::kRectangular) {
        throw ContractError("first look must be rectangular in both directions");
    }
    if (ham_look.range_window() != Window::kHamming ||
        ham_look.azimuth_window() != Window::kHamming) {
        throw ContractError("second look must be Hamming in both directions");
    }
}

}  // namespace

ComplexImage dual_apodization(const ComplexImage& rect_look, const ComplexImage& ham_look) {
    check_looks(rect_look, ham_look);
    ComplexImage out(rect_look.grid());
    out.set_look(Window::kRectangular, Window::kRectangular, rect_look.look_gain());

    const double scale = rect_look.look_gain() / ham_look.look_gain();
    const std::int64_t n = rect_look.grid().size();

#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) {
        const cdouble r = rect_look.data()[static_cast<std::size_t>(i)];
        const cdouble h = ham_look.data()[static_cast<std::size_t>(i)] * scale;
        const double mag_r = std::abs(r);
        const double mag_h = std::abs(h);
        if (mag_h < mag_r) {
            // Tapered magnitude, rectangular phase.
            out.data()[static_cast<std::size_t>(i)] =
                mag_r > 0.0 ? r * (mag_h / mag_r) : cdouble{0.0, 0.0};
        } else {
            out.data()[static_cast<std::size_t>(i)] = r;
        }
    }
    return out;
}

ComplexImage complex_dual_apodization(const ComplexImage& rect_look,
                                      const ComplexImage& ham_look) {
    check_looks(rect_look, ham_look);
    ComplexImage out(rect_look.grid());
    out.set_look(Window::kRectangular, Window::kRectangular, rect_look.look_gain());

    const double scale = rect_look.look_gain() / ham_look.look_gain();
    const std::int64_t n = rect_look.grid().size();

    const auto combine = [](double a, double b) {
        if ((a >= 0.0) != (b >= 0.0)) {
            return 0.0;
        }
        return std::abs(a) <= std::abs(b) ? a : b;
    };

#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) {
        const cdouble r = rect_look.data()[static_cast<std::size_t>(i)];
        const cdouble h = ham_look.data()[static_cast<std::size_t>(i)] * scale;
        out.data()[static_cast<std::size_t>(i)] = {combine(r.real(), h.real()),
                                                   combine(r.imag(), h.imag())};
    }
    return out;
}

}  // namespace wsar
