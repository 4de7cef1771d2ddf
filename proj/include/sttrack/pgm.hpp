#pragma once

#include <string>

#include "sttrack/grid.hpp"

namespace sttrack {

/// Binary PGM (P5). 16-bit files use big-endian sample order.
Grid2D read_pgm(const std::string& path, int* maxval_out = nullptr);
void write_pgm(const std::string& path, const Grid2D& frame, int maxval);

Mask2D read_pgm_mask(const std::string& path);
/// Masks are written with values {0, 255}.
void write_pgm_mask(const std::string& path, const Mask2D& mask);

/// Expands a printf-style frame pattern such as "frame_%04d.pgm".
std::string frame_path(const std::string& pattern, int index);

/// 24-bit binary PPM (P6), used for trajectory overlays.
void write_ppm(const std::string& path, int w, int h, const std::vector<uint8_t>& rgb);

}  // namespace sttrack
