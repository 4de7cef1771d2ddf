#include "sttrack/local_otsu.hpp"

#include <cmath>
#include <stdexcept>

#include "sttrack/parallel.hpp"

namespace sttrack {

namespace {

inline int pixel_value(const Grid2D& frame, int i, int j) {
    double x = frame.at(i, j);
    long v = std::lround(x);
    if (double(v) != x || v < 0 || v > 255)
        throw std::invalid_argument("local Otsu expects integer intensities in [0,255]");
    return int(v);
}

WindowStats otsu_from_sums(const Histogram256& hist) {
    int64_t total = 0, total_i = 0;
    for (int r = 0; r < 256; ++r) {
        total += hist[r];
        total_i += int64_t(r) * hist[r];
    }
    double n = double(total);
    double mu_tot = double(total_i) / n;

    // sigma_b2(T) changes only at occupied bins, so scanning those visits
    // every distinct value; the first occupied bin of a plateau is its
    // smallest T.
    int best_t = 0;
    double best_sigma = 0.0;
    int64_t cum = 0, cum_i = 0;
    int64_t c0 = hist[0], c0_i = 0;  // class sums at best_t
    for (int t = 0; t < 255; ++t) {
        if (!hist[t]) continue;
        cum += hist[t];
        cum_i += int64_t(t) * hist[t];
        if (cum == total) continue;  // empty foreground class scores zero
        double w0 = double(cum) / n;
        double num = mu_tot * w0 - double(cum_i) / n;
        double sigma = num * num / (w0 * (1.0 - w0));
        if (sigma > best_sigma) {
            best_sigma = sigma;
            best_t = t;
            c0 = cum;
            c0_i = cum_i;
        }
    }

    WindowStats s;
    s.threshold = best_t;
    s.sigma_b2 = best_sigma;
    s.w0 = double(c0) / n;
    s.w1 = 1.0 - s.w0;
    s.mu0 = c0 ? double(c0_i) / double(c0) : 0.0;
    s.mu1 = (total - c0) ? double(total_i - c0_i) / double(total - c0) : 0.0;
    s.mu_tot = mu_tot;
    return s;
}

}  // namespace

Histogram256 window_histogram(const Grid2D& frame, int i, int j, int s) {
    Histogram256 hist{};
    int a = i - s / 2, b = j - s / 2;
    for (int dj = 0; dj < s; ++dj) {
        int jj = mirror_index(b + dj, frame.h);
        for (int di = 0; di < s; ++di)
            ++hist[pixel_value(frame, mirror_index(a + di, frame.w), jj)];
    }
    return hist;
}

WindowStats otsu_optimal(const Histogram256& hist) {
    int64_t total = 0;
    for (uint32_t c : hist) total += c;
    if (total == 0) throw std::invalid_argument("otsu_optimal: empty histogram");
    return otsu_from_sums(hist);
}

bool object_presence(const WindowStats& stats, double delta) {
    if (stats.mu0 == 0.0) return stats.mu1 > 0.0;
    return std::fabs(stats.mu0 - stats.mu1) / stats.mu0 > delta;
}

Mask2D binarize_frame(const Grid2D& frame, const OtsuParams& params) {
    const int s = params.s;
    if (s < 1) throw std::invalid_argument("window side must be >= 1");
    const int w = frame.w, h = frame.h;

    // Validate and quantize once.
    std::vector<uint8_t> q(size_t(w) * h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) q[size_t(j) * w + i] = uint8_t(pixel_value(frame, i, j));

    Mask2D out(w, h);
    std::vector<int> mi(size_t(w) + 2 * s), mj(size_t(h) + 2 * s);
    for (int i = -s; i < w + s; ++i) mi[i + s] = mirror_index(i, w);
    for (int j = -s; j < h + s; ++j) mj[j + s] = mirror_index(j, h);

    auto process_row = [&](int j) {
        Histogram256 hist{};
        int b = j - s / 2;
        // full histogram for the row's first window
        for (int dj = 0; dj < s; ++dj) {
            const uint8_t* row = q.data() + size_t(mj[b + dj + s]) * w;
            for (int di = 0; di < s; ++di) ++hist[row[mi[-(s / 2) + di + s]]];
        }
        for (int i = 0; i < w; ++i) {
            if (i > 0) {
                // slide one column right: drop column i-1-s/2, add column i-s/2+s-1
                int drop = mi[(i - 1 - s / 2) + s];
                int add = mi[(i - s / 2 + s - 1) + s];
                for (int dj = 0; dj < s; ++dj) {
                    const uint8_t* row = q.data() + size_t(mj[b + dj + s]) * w;
                    --hist[row[drop]];
                    ++hist[row[add]];
                }
            }
            WindowStats st = otsu_from_sums(hist);
            bool on = q[size_t(j) * w + i] > st.threshold && object_presence(st, params.delta);
            out.at(i, j) = on ? 1 : 0;
        }
    };

    for (int j = 0; j < h; ++j) process_row(j);
    return out;
}

BinaryStack binarize_stack(const ImageStack& stack, const OtsuParams& params) {
    BinaryStack out(stack.width(), stack.height(), stack.frames());
    parallel_for(stack.frames(), params.threads,
                 [&](int k) { out.slices[k] = binarize_frame(stack.slices[k], params); });
    return out;
}

WindowStats global_otsu(const Grid2D& frame) {
    Histogram256 hist{};
    for (int j = 0; j < frame.h; ++j)
        for (int i = 0; i < frame.w; ++i) ++hist[pixel_value(frame, i, j)];
    return otsu_from_sums(hist);
}

}  // namespace sttrack
