#pragma once

#include "core/types.hpp"

namespace wsar {

// Per-pixel minimum-magnitude combination of a rectangular-window look and a
// Hamming-window look of the same scene. The tapered look is rescaled by its
// stored coherent gain so both looks share the rectangular peak scale; the
// output keeps the rectangular look's phase. Side-lobes drop to the tapered
// level while the main lobe stays at the rectangular width.
ComplexImage dual_apodization(const ComplexImage& rect_look, const ComplexImage& ham_look);

// Same two-look combination applied independently to the real and imaginary
// parts: where the looks agree in sign the smaller magnitude wins, where they
// disagree the component is zeroed.
ComplexImage complex_dual_apodization(const ComplexImage& rect_look,
                                      const ComplexImage& ham_look);

}  // namespace wsar
