#pragma once

#include <vector>

#include "core/types.hpp"

namespace wsar {

struct PointDetection {
    double x = 0.0;             // m
    double y = 0.0;             // m
    double intensity_db = 0.0;  // relative to the image peak (<= 0)
};

// Scatterer candidates: pixels that are strict 3x3-neighbourhood local maxima
// of dB magnitude within threshold_db of the image peak. With keep_intensity
// off every emitted point carries intensity 0 (uniform display mode).
std::vector<PointDetection> extract_point_cloud(const ComplexImage& img, double threshold_db,
                                                bool keep_intensity);

}  // namespace wsar
