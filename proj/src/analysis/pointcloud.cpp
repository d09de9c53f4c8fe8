#include "analysis/pointcloud.hpp"

#include <algorithm>
#include <cmath>

namespace wsar {

std::vector<PointDetection> extract_point_cloud(const ComplexImage& img, double threshold_db,
                                                bool keep_intensity) {
    if (!(threshold_db > 0.0)) {
        throw ContractError("detection threshold must be positive");
    }
    const ImageGrid& g = img.grid();
    double p_peak = 0.0;
    for (const cdouble& v : img.data()) {
        p_peak = std::max(p_peak, std::norm(v));
    }
    if (p_peak <= 0.0) {
        throw ContractError("all-zero image");
    }
    const double p_floor = p_peak * std::pow(10.0, -threshold_db / 10.0);

    std::vector<PointDetection> points;
    for (std::int64_t iy = 0; iy < g.ny; ++iy) {
        for (std::int64_t ix = 0; ix < g.nx; ++ix) {
            const double p = std::norm(img.at(iy, ix));
            if (p < p_floor) {
                continue;
            }
            bool is_max = true;
            for (std::int64_t dy = -1; dy <= 1 && is_max; ++dy) {
                for (std::int64_t dx = -1; dx <= 1 && is_max; ++dx) {
                    if (dx == 0 && dy == 0) {
                        continue;
                    }
                    const std::int64_t jy = iy + dy;
                    const std::int64_t jx = ix + dx;
                    if (jy < 0 || jy >= g.ny || jx < 0 || jx >= g.nx) {
                        continue;
                    }
                    if (std::norm(img.at(jy, jx)) >= p) {
                        is_max = false;
                    }
                }
            }
            if (is_max) {
                const double db = 10.0 * std::log10(p / p_peak);
                points.push_back({g.x_at(ix), g.y_at(iy), keep_intensity ? db : 0.0});
            }
        }
    }
    return points;
}

}  // namespace wsar
