#pragma once

#include <string>
#include <vector>

#include "analysis/pointcloud.hpp"
#include "core/types.hpp"
#include "spectral/multispectral.hpp"

namespace wsar {

// 16-bit binary PGM (P5, maxval 65535, big-endian samples) of a dB field on
// [-dynamic_range, 0]; 0 dB maps to 65535. Row 0 of the field is the first
// raster row.
void write_pgm(const Field2D& db_field, double dynamic_range_db, const std::string& path);

// Inverse mapping; accepts maxval 255 or 65535.
Field2D read_pgm(const std::string& path, double dynamic_range_db);

// 8-bit binary PPM (P6, maxval 255).
void write_ppm(const RgbImage& rgb, const std::string& path);

// CSV with header x_m,y_m,intensity_db.
void write_pointcloud_csv(const std::vector<PointDetection>& points, const std::string& path);

}  // namespace wsar
