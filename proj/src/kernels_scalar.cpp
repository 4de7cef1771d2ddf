#include <algorithm>

#include "kernels_detail.hpp"

namespace sttrack::kern {

Padded pad_mirror(const Grid2D& g, int pad) {
    Padded p(g.w, g.h, pad);
    for (int j = -pad; j < g.h + pad; ++j) {
        double* dst = p.px(-pad, j);
        int jm = mirror_index(j, g.h);
        for (int i = -pad; i < g.w + pad; ++i)
            dst[i + pad] = g.at(mirror_index(i, g.w), jm);
    }
    return p;
}

Padded pad_constant(const Grid2D& g, int pad, double border) {
    Padded p(g.w, g.h, pad);
    std::fill(p.v.begin(), p.v.end(), border);
    for (int j = 0; j < g.h; ++j) {
        double* dst = p.px(0, j);
        const double* src = g.row(j);
        for (int i = 0; i < g.w; ++i) dst[i] = src[i];
    }
    return p;
}

Grid2D unpad(const Padded& p) {
    Grid2D g(p.w, p.h);
    for (int j = 0; j < p.h; ++j) {
        const double* src = p.px(0, j);
        double* dst = g.row(j);
        for (int i = 0; i < p.w; ++i) dst[i] = src[i];
    }
    return g;
}

namespace {

using namespace detail;

void conv1d_rows(const Padded& src, const double* k, int radius, Grid2D& dst) {
    for (int j = 0; j < src.h; ++j) {
        const double* s = src.px(0, j);
        double* d = dst.row(j);
        for (int i = 0; i < src.w; ++i) d[i] = conv_px(s + i, 1, k, radius);
    }
}

void conv1d_cols(const Padded& src, const double* k, int radius, Grid2D& dst) {
    for (int j = 0; j < src.h; ++j) {
        const double* s = src.px(0, j);
        double* d = dst.row(j);
        for (int i = 0; i < src.w; ++i) d[i] = conv_px(s + i, src.pw, k, radius);
    }
}

void edge_coeffs(const Padded& u, double inv_h, double K,
                 Grid2D& g10, Grid2D& gm10, Grid2D& g01, Grid2D& g0m1) {
    for (int j = 0; j < u.h; ++j) {
        const double* r = u.px(0, j);
        double* d10 = g10.row(j);
        double* dm10 = gm10.row(j);
        double* d01 = g01.row(j);
        double* d0m1 = g0m1.row(j);
        for (int i = 0; i < u.w; ++i) {
            DiamondGrads g = diamond_px(r + i, u.pw, inv_h);
            d10[i] = edge_g(K, g.gx10, g.gy10);
            dm10[i] = edge_g(K, g.gxm10, g.gym10);
            d01[i] = edge_g(K, g.gx01, g.gy01);
            d0m1[i] = edge_g(K, g.gx0m1, g.gy0m1);
        }
    }
}

void clt_field(const Padded& prev, const Padded& cur, const Padded& next,
               double h_len, double inv_dt2, int rho, Grid2D& dst) {
    const double half_inv_h = 0.5 / h_len;
    for (int j = 0; j < cur.h; ++j) {
        double* d = dst.row(j);
        for (int i = 0; i < cur.w; ++i)
            d[i] = clt_px(prev, cur, next, i, j, h_len, inv_dt2, rho, half_inv_h);
    }
}

void rouy_tourin_step(const Padded& dcur, const Grid2D& interior,
                      double tau, double inv_h, Padded& dst) {
    const double tau_inv_h = tau * inv_h;
    for (int j = 0; j < dcur.h; ++j) {
        const double* r = dcur.px(0, j);
        double* out = dst.px(0, j);
        const double* m = interior.row(j);
        for (int i = 0; i < dcur.w; ++i)
            out[i] = rouy_tourin_px(r + i, dcur.pw, m[i], tau, tau_inv_h);
    }
}

void levelset_coeffs(const Padded& u, double inv_h, double eps2,
                     Grid2D& qinv10, Grid2D& qinvm10, Grid2D& qinv01,
                     Grid2D& qinv0m1, Grid2D& qbar) {
    for (int j = 0; j < u.h; ++j) {
        const double* r = u.px(0, j);
        double* q10 = qinv10.row(j);
        double* qm10 = qinvm10.row(j);
        double* q01 = qinv01.row(j);
        double* q0m1 = qinv0m1.row(j);
        double* qb = qbar.row(j);
        for (int i = 0; i < u.w; ++i) {
            LevelSetPx o = levelset_px(r + i, u.pw, inv_h, eps2);
            q10[i] = o.qinv10;
            qm10[i] = o.qinvm10;
            q01[i] = o.qinv01;
            q0m1[i] = o.qinv0m1;
            qb[i] = o.qbar;
        }
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",
        &conv1d_rows,
        &conv1d_cols,
        &edge_coeffs,
        &clt_field,
        &rouy_tourin_step,
        &levelset_coeffs,
    };
    return ops;
}

}  // namespace sttrack::kern
