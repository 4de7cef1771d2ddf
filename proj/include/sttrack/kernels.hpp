#pragma once

#include <string>
#include <vector>

#include "sttrack/grid.hpp"

namespace sttrack::kern {

/// Frame with a mirrored (or constant) border of `pad` pixels on every side.
/// Interior pixel (i, j) lives at px(i, j); stride is pw.
struct Padded {
    int w = 0, h = 0, pad = 0, pw = 0;
    std::vector<double> v;

    Padded() = default;
    Padded(int w_, int h_, int pad_)
        : w(w_), h(h_), pad(pad_), pw(w_ + 2 * pad_), v(size_t(pw) * (h_ + 2 * pad_), 0.0) {}

    double* px(int i, int j) { return v.data() + size_t(j + pad) * pw + (i + pad); }
    const double* px(int i, int j) const { return v.data() + size_t(j + pad) * pw + (i + pad); }
    double at(int i, int j) const { return *px(i, j); }
    double& at(int i, int j) { return *px(i, j); }
};

Padded pad_mirror(const Grid2D& g, int pad);
Padded pad_constant(const Grid2D& g, int pad, double border);
Grid2D unpad(const Padded& p);

// Kernel signatures. All kernels are pure per-pixel maps over the interior of
// pre-padded inputs; outputs are unpadded w*h planes unless noted. Scalar and
// SIMD variants of each kernel must produce bit-identical results.

/// 1D convolution along rows: dst(i,j) = sum_t k[t+r] * src(i+t, j).
using Conv1dFn = void (*)(const Padded& src, const double* k, int radius, Grid2D& dst);

/// Four diamond-cell edge-detector coefficients g(|grad^{l,m} u|) with
/// g(s) = 1/(1 + K s^2). Plane order: (1,0), (-1,0), (0,1), (0,-1).
using EdgeCoeffsFn = void (*)(const Padded& u, double inv_h, double K,
                              Grid2D& g10, Grid2D& gm10, Grid2D& g01, Grid2D& g0m1);

/// Temporal-coherence field: per-pixel exhaustive minimum over integer offset
/// pairs (w1, w2), |w|_inf <= rho, of
///   |<grad u, (w1-w2) h>| + |prev(x-w1) - cur(x)| + |next(x+w2) - cur(x)|
/// scaled by inv_dt2. grad u is the central difference of cur.
/// prev/cur/next must be padded by at least rho+1.
using CltFieldFn = void (*)(const Padded& prev, const Padded& cur, const Padded& next,
                            double h_len, double inv_dt2, int rho, Grid2D& dst);

/// One explicit upwind step of the time-relaxed eikonal equation:
///   d' = d + tau - (tau/h) * sqrt(M10 + M01)
/// applied where interior(i,j) != 0; elsewhere d' = d. Writes into the
/// interior of `dst` (same pad as `d`), so padded buffers can ping-pong.
using RouyTourinFn = void (*)(const Padded& d, const Grid2D& interior,
                              double tau, double inv_h, Padded& dst);

/// Level-set coefficient planes: qinv^{l,m} = 1/sqrt(eps2 + |grad^{l,m} u|^2)
/// per edge (plane order as EdgeCoeffsFn) and
/// qbar = sqrt(eps2 + mean of the four |grad^{l,m} u|^2).
using LevelSetCoeffsFn = void (*)(const Padded& u, double inv_h, double eps2,
                                  Grid2D& qinv10, Grid2D& qinvm10, Grid2D& qinv01,
                                  Grid2D& qinv0m1, Grid2D& qbar);

struct Ops {
    const char* name;
    Conv1dFn conv1d_rows;
    Conv1dFn conv1d_cols;
    EdgeCoeffsFn edge_coeffs;
    CltFieldFn clt_field;
    RouyTourinFn rouy_tourin_step;
    LevelSetCoeffsFn levelset_coeffs;
};

enum class Mode { automatic, scalar, avx2 };

const Ops& scalar_ops();
/// Returns the AVX2 kernel table, or nullptr when unsupported (at build or run time).
const Ops* avx2_ops();

void set_mode(Mode m);
Mode mode();
/// Active kernel table under the current mode.
const Ops& ops();

Mode parse_mode(const std::string& name);

}  // namespace sttrack::kern
