#pragma once

#include <array>
#include <cstdint>

#include "sttrack/grid.hpp"

namespace sttrack {

struct OtsuParams {
    int s = 50;          // window side in pixels
    double delta = 0.5;  // relative mean-difference threshold for object presence
    int threads = 0;
};

/// Class statistics at the optimal threshold of one window histogram.
struct WindowStats {
    int threshold = 0;      // T*, argmax of the between-class variance
    double sigma_b2 = 0.0;  // between-class variance at T*
    double w0 = 0.0, w1 = 0.0;
    double mu0 = 0.0, mu1 = 0.0, mu_tot = 0.0;
};

using Histogram256 = std::array<uint32_t, 256>;

/// Histogram of the s*s window spanning columns i-floor(s/2) .. i-floor(s/2)+s-1
/// (rows likewise), mirrored at the frame boundary. Counts always sum to s*s.
Histogram256 window_histogram(const Grid2D& frame, int i, int j, int s);

/// Optimal Otsu threshold: T* = argmax over 0 <= T < 255 of the between-class
/// variance, ties broken by the smallest T. Thresholds leaving either class
/// empty score zero.
WindowStats otsu_optimal(const Histogram256& hist);

/// Window-contains-an-object test: |mu0 - mu1| / mu0 > delta.
/// mu0 == 0 counts as presence whenever mu1 > 0.
bool object_presence(const WindowStats& stats, double delta);

/// Per-pixel windowed Otsu binarization with the presence test. The frame
/// must hold integers in [0, 255]. Uses incrementally slid histograms; the
/// result equals per-pixel recomputation exactly.
Mask2D binarize_frame(const Grid2D& frame, const OtsuParams& params);
BinaryStack binarize_stack(const ImageStack& stack, const OtsuParams& params);

/// Whole-frame histogram Otsu without the presence test.
WindowStats global_otsu(const Grid2D& frame);

}  // namespace sttrack
