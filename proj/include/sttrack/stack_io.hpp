#pragma once

#include <string>
#include <vector>

#include "sttrack/grid.hpp"

namespace sttrack {

struct HistogramCropParams {
    double p_noise = 0.0;  // fraction of pixels treated as bright spot noise
};

enum class Interval { unit, byte255 };

/// Loads frames 0,1,2,... matching a printf-style pattern. Stops at the first
/// missing index; if any of the following probe_window indices exists, the
/// sequence has a hole and loading fails. bit_depth must match the files.
ImageStack load_stack(const std::string& pattern, int bit_depth, int probe_window = 64);
void save_stack(const ImageStack& stack, const std::string& pattern, int bit_depth);

BinaryStack load_mask_stack(const std::string& pattern, int probe_window = 64);
void save_mask_stack(const BinaryStack& stack, const std::string& pattern);

/// Sidecar with width/height/frames/pixel_size next to the frame files.
void write_stack_meta(const std::string& dir, const ImageStack& stack);
double read_stack_meta_pixel_size(const std::string& dir);  // 1.0 when absent

/// Per-pixel maximum over a set of aligned z-plane stacks.
ImageStack max_projection(const std::vector<ImageStack>& z_stacks);

/// Removes the small bright-spot peak at the top of each slice histogram:
/// counting pixels downward from the maximum intensity, the first intensity
/// I* whose descending cumulative count reaches n_total * p_noise becomes the
/// new per-slice maximum; everything above it is clamped to I*. Requires
/// integer-valued intensities. Applied per slice.
ImageStack histogram_crop(const ImageStack& stack, const HistogramCropParams& params);

/// Affine min-max rescale over the whole stack. A constant stack maps to the
/// interval minimum. The [0,255] target also rounds to integers.
ImageStack rescale(const ImageStack& stack, Interval target);

}  // namespace sttrack
