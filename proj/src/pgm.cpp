#include "sttrack/pgm.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "sttrack/errors.hpp"

namespace sttrack {

namespace {

// Reads one whitespace-delimited token, skipping '#' comments.
int read_header_int(std::istream& in, const std::string& path) {
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
        } else if (!isspace(c)) {
            in.unget();
            break;
        }
    }
    int value;
    if (!(in >> value)) throw IoError("malformed PGM header in " + path);
    return value;
}

}  // namespace

Grid2D read_pgm(const std::string& path, int* maxval_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != 'P' || m1 != '5') throw IoError(path + " is not a binary PGM (P5) file");
    int w = read_header_int(in, path);
    int h = read_header_int(in, path);
    int maxval = read_header_int(in, path);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535)
        throw IoError("bad PGM dimensions in " + path);
    in.get();  // single whitespace after maxval
    Grid2D g(w, h);
    size_t n = size_t(w) * h;
    if (maxval < 256) {
        std::vector<uint8_t> buf(n);
        in.read(reinterpret_cast<char*>(buf.data()), std::streamsize(n));
        if (!in) throw IoError("truncated PGM data in " + path);
        for (size_t i = 0; i < n; ++i) g.v[i] = double(buf[i]);
    } else {
        std::vector<uint8_t> buf(2 * n);
        in.read(reinterpret_cast<char*>(buf.data()), std::streamsize(2 * n));
        if (!in) throw IoError("truncated PGM data in " + path);
        for (size_t i = 0; i < n; ++i)
            g.v[i] = double((unsigned(buf[2 * i]) << 8) | unsigned(buf[2 * i + 1]));
    }
    if (maxval_out) *maxval_out = maxval;
    return g;
}

void write_pgm(const std::string& path, const Grid2D& frame, int maxval) {
    if (maxval != 255 && maxval != 65535)
        throw IoError("PGM maxval must be 255 or 65535");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "P5\n" << frame.w << " " << frame.h << "\n" << maxval << "\n";
    size_t n = frame.size();
    if (maxval == 255) {
        std::vector<uint8_t> buf(n);
        for (size_t i = 0; i < n; ++i) {
            long v = std::lround(frame.v[i]);
            if (v < 0 || v > 255) throw IoError("pixel value out of 8-bit range in " + path);
            buf[i] = uint8_t(v);
        }
        out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(n));
    } else {
        std::vector<uint8_t> buf(2 * n);
        for (size_t i = 0; i < n; ++i) {
            long v = std::lround(frame.v[i]);
            if (v < 0 || v > 65535) throw IoError("pixel value out of 16-bit range in " + path);
            buf[2 * i] = uint8_t(v >> 8);
            buf[2 * i + 1] = uint8_t(v & 0xff);
        }
        out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(2 * n));
    }
    if (!out) throw IoError("failed writing " + path);
}

Mask2D read_pgm_mask(const std::string& path) {
    Grid2D g = read_pgm(path);
    Mask2D m(g.w, g.h);
    for (size_t i = 0; i < g.size(); ++i) m.v[i] = g.v[i] > 0.0 ? 1 : 0;
    return m;
}

void write_pgm_mask(const std::string& path, const Mask2D& mask) {
    Grid2D g(mask.w, mask.h);
    for (size_t i = 0; i < g.size(); ++i) g.v[i] = mask.v[i] ? 255.0 : 0.0;
    write_pgm(path, g, 255);
}

std::string frame_path(const std::string& pattern, int index) {
    char buf[4096];
    int n = snprintf(buf, sizeof(buf), pattern.c_str(), index);
    if (n < 0 || size_t(n) >= sizeof(buf))
        throw IoError("bad frame pattern: " + pattern);
    return std::string(buf);
}

void write_ppm(const std::string& path, int w, int h, const std::vector<uint8_t>& rgb) {
    if (rgb.size() != size_t(w) * h * 3) throw IoError("PPM buffer size mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "P6\n" << w << " " << h << "\n255\n";
    out.write(reinterpret_cast<const char*>(rgb.data()), std::streamsize(rgb.size()));
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace sttrack
