#pragma once

#include <cstdint>

#include "core/types.hpp"

namespace wsar {

// Unnormalized forward DFT, out-of-place. Backed by FFTW with a cached plan
// per length; safe to call concurrently on distinct buffers.
void fft_forward(const cdouble* in, cdouble* out, std::int64_t n);

}  // namespace wsar
