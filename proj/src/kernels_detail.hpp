#pragma once

#include <cmath>
#include <cstddef>

#include "sttrack/kernels.hpp"

// Per-pixel scalar routines shared by the scalar kernels and the remainder
// loops of the SIMD kernels. Expression order here defines the reference
// result; SIMD variants must replicate it operation for operation.

namespace sttrack::kern::detail {

inline double conv_px(const double* s, ptrdiff_t stride, const double* k, int radius) {
    double acc = 0.0;
    for (int t = -radius; t <= radius; ++t) acc += k[t + radius] * s[t * stride];
    return acc;
}

// Diamond-cell edge gradients at one pixel. The j axis grows downwards;
// (0,1) is the +j edge. Corner averages use the four pixels around each
// corner of the finite volume.
struct DiamondGrads {
    double gx10, gy10, gxm10, gym10, gx01, gy01, gx0m1, gy0m1;
};

inline DiamondGrads diamond_px(const double* r, ptrdiff_t pw, double inv_h) {
    const ptrdiff_t up = -pw, dn = pw;
    double C = r[0], E = r[1], W = r[-1], N = r[dn], S = r[up];
    double NE = r[dn + 1], NW = r[dn - 1], SE = r[up + 1], SW = r[up - 1];
    double c11 = 0.25 * (C + N + E + NE);
    double c1m1 = 0.25 * (C + E + S + SE);
    double cm1m1 = 0.25 * (C + W + S + SW);
    double cm11 = 0.25 * (C + N + W + NW);
    DiamondGrads g;
    g.gx10 = (E - C) * inv_h;
    g.gy10 = (c11 - c1m1) * inv_h;
    g.gxm10 = (W - C) * inv_h;
    g.gym10 = (cm11 - cm1m1) * inv_h;
    g.gx01 = (c11 - cm11) * inv_h;
    g.gy01 = (N - C) * inv_h;
    g.gx0m1 = (c1m1 - cm1m1) * inv_h;
    g.gy0m1 = (S - C) * inv_h;
    return g;
}

inline double edge_g(double K, double gx, double gy) {
    return 1.0 / (1.0 + K * (gx * gx + gy * gy));
}

inline double clt_px(const Padded& prev, const Padded& cur, const Padded& next,
                     int i, int j, double h_len, double inv_dt2, int rho,
                     double half_inv_h) {
    const double* c = cur.px(0, j);
    const ptrdiff_t pw = cur.pw;
    double gx = (c[i + 1] - c[i - 1]) * half_inv_h;
    double gy = (c[i + pw] - c[i - pw]) * half_inv_h;
    double cv = c[i];
    double best = 1e300;
    for (int w1y = -rho; w1y <= rho; ++w1y)
        for (int w1x = -rho; w1x <= rho; ++w1x) {
            double pv = std::fabs(prev.at(i - w1x, j - w1y) - cv);
            for (int w2y = -rho; w2y <= rho; ++w2y)
                for (int w2x = -rho; w2x <= rho; ++w2x) {
                    double dx = double(w1x - w2x) * h_len;
                    double dy = double(w1y - w2y) * h_len;
                    double val = std::fabs(gx * dx + gy * dy) + pv +
                                 std::fabs(next.at(i + w2x, j + w2y) - cv);
                    if (val < best) best = val;
                }
        }
    return best * inv_dt2;
}

inline double rouy_tourin_px(const double* r, ptrdiff_t pw, double m,
                             double tau, double tau_inv_h) {
    double c = r[0];
    double De = std::min(r[1] - c, 0.0), Dw = std::min(r[-1] - c, 0.0);
    double Dn = std::min(r[pw] - c, 0.0), Ds = std::min(r[-pw] - c, 0.0);
    double M10 = std::max(De * De, Dw * Dw);
    double M01 = std::max(Dn * Dn, Ds * Ds);
    double upd = c + tau - tau_inv_h * std::sqrt(M10 + M01);
    return (m != 0.0) ? upd : c;
}

struct LevelSetPx {
    double qinv10, qinvm10, qinv01, qinv0m1, qbar;
};

inline LevelSetPx levelset_px(const double* r, ptrdiff_t pw, double inv_h, double eps2) {
    DiamondGrads g = diamond_px(r, pw, inv_h);
    double n10 = g.gx10 * g.gx10 + g.gy10 * g.gy10;
    double nm10 = g.gxm10 * g.gxm10 + g.gym10 * g.gym10;
    double n01 = g.gx01 * g.gx01 + g.gy01 * g.gy01;
    double n0m1 = g.gx0m1 * g.gx0m1 + g.gy0m1 * g.gy0m1;
    LevelSetPx o;
    o.qinv10 = 1.0 / std::sqrt(eps2 + n10);
    o.qinvm10 = 1.0 / std::sqrt(eps2 + nm10);
    o.qinv01 = 1.0 / std::sqrt(eps2 + n01);
    o.qinv0m1 = 1.0 / std::sqrt(eps2 + n0m1);
    o.qbar = std::sqrt(eps2 + 0.25 * (n10 + nm10 + n01 + n0m1));
    return o;
}

}  // namespace sttrack::kern::detail
