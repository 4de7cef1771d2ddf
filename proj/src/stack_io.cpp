#include "sttrack/stack_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>

#include "sttrack/errors.hpp"
#include "sttrack/pgm.hpp"

namespace fs = std::filesystem;

namespace sttrack {

ImageStack load_stack(const std::string& pattern, int bit_depth, int probe_window) {
    if (bit_depth != 8 && bit_depth != 16)
        throw IoError("bit_depth must be 8 or 16");
    ImageStack stack;
    int idx = 0;
    for (;; ++idx) {
        std::string path = frame_path(pattern, idx);
        if (!fs::exists(path)) break;
        int maxval = 0;
        Grid2D f = read_pgm(path, &maxval);
        int depth = maxval < 256 ? 8 : 16;
        if (depth != bit_depth)
            throw IoError(path + ": expected " + std::to_string(bit_depth) + "-bit data, found " +
                          std::to_string(depth) + "-bit");
        if (!stack.slices.empty() && !f.same_shape(stack.slices[0]))
            throw IoError(path + ": frame dimensions differ from frame 0");
        stack.slices.push_back(std::move(f));
    }
    for (int probe = idx + 1; probe <= idx + probe_window; ++probe) {
        if (fs::exists(frame_path(pattern, probe)))
            throw IoError("frame sequence has a gap at index " + std::to_string(idx) +
                          " (found frame " + std::to_string(probe) + ")");
    }
    if (stack.slices.empty()) throw IoError("no frames match pattern " + pattern);
    fs::path dir = fs::path(frame_path(pattern, 0)).parent_path();
    stack.pixel_size = read_stack_meta_pixel_size(dir.string());
    return stack;
}

void save_stack(const ImageStack& stack, const std::string& pattern, int bit_depth) {
    if (bit_depth != 8 && bit_depth != 16)
        throw IoError("bit_depth must be 8 or 16");
    fs::path dir = fs::path(frame_path(pattern, 0)).parent_path();
    if (!dir.empty()) fs::create_directories(dir);
    for (int k = 0; k < stack.frames(); ++k)
        write_pgm(frame_path(pattern, k), stack.slices[k], bit_depth == 8 ? 255 : 65535);
    write_stack_meta(dir.string(), stack);
}

BinaryStack load_mask_stack(const std::string& pattern, int probe_window) {
    BinaryStack stack;
    int idx = 0;
    for (;; ++idx) {
        std::string path = frame_path(pattern, idx);
        if (!fs::exists(path)) break;
        Mask2D m = read_pgm_mask(path);
        if (!stack.slices.empty() && !m.same_shape(stack.slices[0]))
            throw IoError(path + ": frame dimensions differ from frame 0");
        stack.slices.push_back(std::move(m));
    }
    for (int probe = idx + 1; probe <= idx + probe_window; ++probe) {
        if (fs::exists(frame_path(pattern, probe)))
            throw IoError("mask sequence has a gap at index " + std::to_string(idx) +
                          " (found frame " + std::to_string(probe) + ")");
    }
    if (stack.slices.empty()) throw IoError("no frames match pattern " + pattern);
    return stack;
}

void save_mask_stack(const BinaryStack& stack, const std::string& pattern) {
    fs::path dir = fs::path(frame_path(pattern, 0)).parent_path();
    if (!dir.empty()) fs::create_directories(dir);
    for (int k = 0; k < stack.frames(); ++k)
        write_pgm_mask(frame_path(pattern, k), stack.slices[k]);
}

void write_stack_meta(const std::string& dir, const ImageStack& stack) {
    fs::path p = fs::path(dir) / "stack.meta";
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    out << "width=" << stack.width() << "\n";
    out << "height=" << stack.height() << "\n";
    out << "frames=" << stack.frames() << "\n";
    out << "pixel_size=" << stack.pixel_size << "\n";
}

double read_stack_meta_pixel_size(const std::string& dir) {
    fs::path p = fs::path(dir) / "stack.meta";
    std::ifstream in(p);
    if (!in) return 1.0;
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        if (line.substr(0, eq) == "pixel_size") return std::stod(line.substr(eq + 1));
    }
    return 1.0;
}

ImageStack max_projection(const std::vector<ImageStack>& z_stacks) {
    if (z_stacks.empty()) throw IoError("max_projection: empty z range");
    const ImageStack& first = z_stacks[0];
    for (const auto& s : z_stacks)
        if (s.width() != first.width() || s.height() != first.height() ||
            s.frames() != first.frames())
            throw IoError("max_projection: z planes disagree in dimensions");
    ImageStack out = first;
    for (size_t z = 1; z < z_stacks.size(); ++z)
        for (int k = 0; k < out.frames(); ++k) {
            const Grid2D& src = z_stacks[z].slices[k];
            Grid2D& dst = out.slices[k];
            for (size_t i = 0; i < dst.size(); ++i)
                if (src.v[i] > dst.v[i]) dst.v[i] = src.v[i];
        }
    return out;
}

ImageStack histogram_crop(const ImageStack& stack, const HistogramCropParams& params) {
    if (params.p_noise < 0.0 || params.p_noise > 1.0)
        throw IoError("p_noise must lie in [0, 1]");
    ImageStack out = stack;
    if (params.p_noise == 0.0) return out;
    for (Grid2D& f : out.slices) {
        // integer histogram of the slice
        std::map<long, size_t> hist;
        for (double x : f.v) {
            long v = std::lround(x);
            if (double(v) != x) throw IoError("histogram_crop requires integer intensities");
            ++hist[v];
        }
        double n_noise = double(f.size()) * params.p_noise;
        long cut = hist.begin()->first;
        size_t cum = 0;
        bool found = false;
        for (auto it = hist.rbegin(); it != hist.rend(); ++it) {
            cum += it->second;
            if (double(cum) >= n_noise) {
                cut = it->first;
                found = true;
                break;
            }
        }
        if (!found)
            throw IoError("histogram_crop: p_noise larger than the whole histogram");
        for (double& x : f.v)
            if (x > double(cut)) x = double(cut);
    }
    return out;
}

ImageStack rescale(const ImageStack& stack, Interval target) {
    double mn, mx;
    stack_min_max(stack, mn, mx);
    double lo = 0.0, hi = target == Interval::unit ? 1.0 : 255.0;
    ImageStack out = stack;
    if (mx == mn) {
        for (Grid2D& f : out.slices)
            for (double& x : f.v) x = lo;
        return out;
    }
    double scale = (hi - lo) / (mx - mn);
    for (Grid2D& f : out.slices)
        for (double& x : f.v) {
            double y = lo + (x - mn) * scale;
            x = target == Interval::byte255 ? double(std::lround(y)) : y;
        }
    return out;
}

}  // namespace sttrack
