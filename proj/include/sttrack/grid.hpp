#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace sttrack {

/// Reflects an out-of-range index into [0, n) with edge repetition
/// (-1 -> 0, n -> n-1). Used for all mirrored boundary lookups.
inline int mirror_index(int i, int n) {
    assert(n > 0);
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

struct Grid2D {
    int w = 0, h = 0;
    std::vector<double> v;

    Grid2D() = default;
    Grid2D(int w_, int h_, double fill = 0.0) : w(w_), h(h_), v(size_t(w_) * size_t(h_), fill) {}

    double& at(int i, int j) { return v[size_t(j) * w + i]; }
    double at(int i, int j) const { return v[size_t(j) * w + i]; }
    /// Mirrored access for out-of-range (i, j).
    double atm(int i, int j) const { return at(mirror_index(i, w), mirror_index(j, h)); }

    double* row(int j) { return v.data() + size_t(j) * w; }
    const double* row(int j) const { return v.data() + size_t(j) * w; }

    size_t size() const { return v.size(); }
    bool same_shape(const Grid2D& o) const { return w == o.w && h == o.h; }
};

struct Mask2D {
    int w = 0, h = 0;
    std::vector<uint8_t> v;

    Mask2D() = default;
    Mask2D(int w_, int h_, uint8_t fill = 0) : w(w_), h(h_), v(size_t(w_) * size_t(h_), fill) {}

    uint8_t& at(int i, int j) { return v[size_t(j) * w + i]; }
    uint8_t at(int i, int j) const { return v[size_t(j) * w + i]; }
    uint8_t atm(int i, int j) const { return at(mirror_index(i, w), mirror_index(j, h)); }

    size_t count() const {
        size_t n = 0;
        for (uint8_t b : v) n += (b != 0);
        return n;
    }
    bool same_shape(const Mask2D& o) const { return w == o.w && h == o.h; }
};

/// 2D+time scalar field; slice k is the frame at time index k.
struct ImageStack {
    double pixel_size = 1.0;
    std::vector<Grid2D> slices;

    ImageStack() = default;
    ImageStack(int w, int h, int n_slices, double fill = 0.0, double px = 1.0)
        : pixel_size(px), slices(n_slices, Grid2D(w, h, fill)) {}

    int width() const { return slices.empty() ? 0 : slices[0].w; }
    int height() const { return slices.empty() ? 0 : slices[0].h; }
    int frames() const { return int(slices.size()); }
};

struct BinaryStack {
    double pixel_size = 1.0;
    std::vector<Mask2D> slices;

    BinaryStack() = default;
    BinaryStack(int w, int h, int n_slices)
        : slices(n_slices, Mask2D(w, h, 0)) {}

    int width() const { return slices.empty() ? 0 : slices[0].w; }
    int height() const { return slices.empty() ? 0 : slices[0].h; }
    int frames() const { return int(slices.size()); }
};

inline void stack_min_max(const ImageStack& s, double& mn, double& mx) {
    mn = 1e300;
    mx = -1e300;
    for (const auto& f : s.slices)
        for (double x : f.v) {
            if (x < mn) mn = x;
            if (x > mx) mx = x;
        }
}

}  // namespace sttrack
