#include "kernels_detail.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// AVX2 variants of the scalar kernels. Each vector lane evaluates the exact
// expression sequence of the corresponding detail:: routine (no FMA, same
// association), so results are bit-identical to the scalar reference. Row
// remainders fall back to the shared per-pixel helpers.

namespace sttrack::kern {
namespace {

using namespace detail;

const __m256d kSignMask = _mm256_set1_pd(-0.0);

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(kSignMask, x); }

void conv1d_rows(const Padded& src, const double* k, int radius, Grid2D& dst) {
    for (int j = 0; j < src.h; ++j) {
        const double* s = src.px(0, j);
        double* d = dst.row(j);
        int i = 0;
        for (; i + 4 <= src.w; i += 4) {
            __m256d acc = _mm256_setzero_pd();
            for (int t = -radius; t <= radius; ++t) {
                __m256d kv = _mm256_set1_pd(k[t + radius]);
                acc = _mm256_add_pd(acc, _mm256_mul_pd(kv, _mm256_loadu_pd(s + i + t)));
            }
            _mm256_storeu_pd(d + i, acc);
        }
        for (; i < src.w; ++i) d[i] = conv_px(s + i, 1, k, radius);
    }
}

void conv1d_cols(const Padded& src, const double* k, int radius, Grid2D& dst) {
    for (int j = 0; j < src.h; ++j) {
        const double* s = src.px(0, j);
        double* d = dst.row(j);
        int i = 0;
        for (; i + 4 <= src.w; i += 4) {
            __m256d acc = _mm256_setzero_pd();
            for (int t = -radius; t <= radius; ++t) {
                __m256d kv = _mm256_set1_pd(k[t + radius]);
                acc = _mm256_add_pd(acc,
                                    _mm256_mul_pd(kv, _mm256_loadu_pd(s + i + ptrdiff_t(t) * src.pw)));
            }
            _mm256_storeu_pd(d + i, acc);
        }
        for (; i < src.w; ++i) d[i] = conv_px(s + i, src.pw, k, radius);
    }
}

struct DiamondGradsV {
    __m256d gx10, gy10, gxm10, gym10, gx01, gy01, gx0m1, gy0m1;
};

inline DiamondGradsV diamond_v(const double* r, ptrdiff_t pw, __m256d inv_h) {
    const ptrdiff_t up = -pw, dn = pw;
    __m256d C = _mm256_loadu_pd(r);
    __m256d E = _mm256_loadu_pd(r + 1);
    __m256d W = _mm256_loadu_pd(r - 1);
    __m256d N = _mm256_loadu_pd(r + dn);
    __m256d S = _mm256_loadu_pd(r + up);
    __m256d NE = _mm256_loadu_pd(r + dn + 1);
    __m256d NW = _mm256_loadu_pd(r + dn - 1);
    __m256d SE = _mm256_loadu_pd(r + up + 1);
    __m256d SW = _mm256_loadu_pd(r + up - 1);
    __m256d quarter = _mm256_set1_pd(0.25);
    __m256d c11 = _mm256_mul_pd(quarter, _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(C, N), E), NE));
    __m256d c1m1 = _mm256_mul_pd(quarter, _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(C, E), S), SE));
    __m256d cm1m1 = _mm256_mul_pd(quarter, _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(C, W), S), SW));
    __m256d cm11 = _mm256_mul_pd(quarter, _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(C, N), W), NW));
    DiamondGradsV g;
    g.gx10 = _mm256_mul_pd(_mm256_sub_pd(E, C), inv_h);
    g.gy10 = _mm256_mul_pd(_mm256_sub_pd(c11, c1m1), inv_h);
    g.gxm10 = _mm256_mul_pd(_mm256_sub_pd(W, C), inv_h);
    g.gym10 = _mm256_mul_pd(_mm256_sub_pd(cm11, cm1m1), inv_h);
    g.gx01 = _mm256_mul_pd(_mm256_sub_pd(c11, cm11), inv_h);
    g.gy01 = _mm256_mul_pd(_mm256_sub_pd(N, C), inv_h);
    g.gx0m1 = _mm256_mul_pd(_mm256_sub_pd(c1m1, cm1m1), inv_h);
    g.gy0m1 = _mm256_mul_pd(_mm256_sub_pd(S, C), inv_h);
    return g;
}

inline __m256d edge_g_v(__m256d K, __m256d gx, __m256d gy) {
    __m256d one = _mm256_set1_pd(1.0);
    __m256d n = _mm256_add_pd(_mm256_mul_pd(gx, gx), _mm256_mul_pd(gy, gy));
    return _mm256_div_pd(one, _mm256_add_pd(one, _mm256_mul_pd(K, n)));
}

void edge_coeffs(const Padded& u, double inv_h, double K,
                 Grid2D& g10, Grid2D& gm10, Grid2D& g01, Grid2D& g0m1) {
    __m256d vinv_h = _mm256_set1_pd(inv_h);
    __m256d vK = _mm256_set1_pd(K);
    for (int j = 0; j < u.h; ++j) {
        const double* r = u.px(0, j);
        double* d10 = g10.row(j);
        double* dm10 = gm10.row(j);
        double* d01 = g01.row(j);
        double* d0m1 = g0m1.row(j);
        int i = 0;
        for (; i + 4 <= u.w; i += 4) {
            DiamondGradsV g = diamond_v(r + i, u.pw, vinv_h);
            _mm256_storeu_pd(d10 + i, edge_g_v(vK, g.gx10, g.gy10));
            _mm256_storeu_pd(dm10 + i, edge_g_v(vK, g.gxm10, g.gym10));
            _mm256_storeu_pd(d01 + i, edge_g_v(vK, g.gx01, g.gy01));
            _mm256_storeu_pd(d0m1 + i, edge_g_v(vK, g.gx0m1, g.gy0m1));
        }
        for (; i < u.w; ++i) {
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
    const ptrdiff_t pw = cur.pw;
    __m256d vhalf_inv_h = _mm256_set1_pd(half_inv_h);
    __m256d vinv_dt2 = _mm256_set1_pd(inv_dt2);
    for (int j = 0; j < cur.h; ++j) {
        const double* c = cur.px(0, j);
        double* d = dst.row(j);
        int i = 0;
        for (; i + 4 <= cur.w; i += 4) {
            __m256d cv = _mm256_loadu_pd(c + i);
            __m256d gx = _mm256_mul_pd(
                _mm256_sub_pd(_mm256_loadu_pd(c + i + 1), _mm256_loadu_pd(c + i - 1)), vhalf_inv_h);
            __m256d gy = _mm256_mul_pd(
                _mm256_sub_pd(_mm256_loadu_pd(c + i + pw), _mm256_loadu_pd(c + i - pw)), vhalf_inv_h);
            __m256d best = _mm256_set1_pd(1e300);
            for (int w1y = -rho; w1y <= rho; ++w1y)
                for (int w1x = -rho; w1x <= rho; ++w1x) {
                    const double* pp = prev.px(i - w1x, j - w1y);
                    __m256d pv = vabs(_mm256_sub_pd(_mm256_loadu_pd(pp), cv));
                    for (int w2y = -rho; w2y <= rho; ++w2y)
                        for (int w2x = -rho; w2x <= rho; ++w2x) {
                            __m256d dx = _mm256_set1_pd(double(w1x - w2x) * h_len);
                            __m256d dy = _mm256_set1_pd(double(w1y - w2y) * h_len);
                            const double* np = next.px(i + w2x, j + w2y);
                            __m256d gterm =
                                vabs(_mm256_add_pd(_mm256_mul_pd(gx, dx), _mm256_mul_pd(gy, dy)));
                            __m256d nterm = vabs(_mm256_sub_pd(_mm256_loadu_pd(np), cv));
                            __m256d val = _mm256_add_pd(_mm256_add_pd(gterm, pv), nterm);
                            best = _mm256_min_pd(best, val);
                        }
                }
            _mm256_storeu_pd(d + i, _mm256_mul_pd(best, vinv_dt2));
        }
        for (; i < cur.w; ++i)
            d[i] = clt_px(prev, cur, next, i, j, h_len, inv_dt2, rho, half_inv_h);
    }
}

void rouy_tourin_step(const Padded& dcur, const Grid2D& interior,
                      double tau, double inv_h, Padded& dst) {
    const double tau_inv_h = tau * inv_h;
    __m256d vtau = _mm256_set1_pd(tau);
    __m256d vtih = _mm256_set1_pd(tau_inv_h);
    __m256d zero = _mm256_setzero_pd();
    const ptrdiff_t pw = dcur.pw;
    for (int j = 0; j < dcur.h; ++j) {
        const double* r = dcur.px(0, j);
        double* out = dst.px(0, j);
        const double* m = interior.row(j);
        int i = 0;
        for (; i + 4 <= dcur.w; i += 4) {
            __m256d c = _mm256_loadu_pd(r + i);
            __m256d De = _mm256_min_pd(_mm256_sub_pd(_mm256_loadu_pd(r + i + 1), c), zero);
            __m256d Dw = _mm256_min_pd(_mm256_sub_pd(_mm256_loadu_pd(r + i - 1), c), zero);
            __m256d Dn = _mm256_min_pd(_mm256_sub_pd(_mm256_loadu_pd(r + i + pw), c), zero);
            __m256d Ds = _mm256_min_pd(_mm256_sub_pd(_mm256_loadu_pd(r + i - pw), c), zero);
            __m256d M10 = _mm256_max_pd(_mm256_mul_pd(De, De), _mm256_mul_pd(Dw, Dw));
            __m256d M01 = _mm256_max_pd(_mm256_mul_pd(Dn, Dn), _mm256_mul_pd(Ds, Ds));
            __m256d upd = _mm256_sub_pd(_mm256_add_pd(c, vtau),
                                        _mm256_mul_pd(vtih, _mm256_sqrt_pd(_mm256_add_pd(M10, M01))));
            __m256d msk = _mm256_cmp_pd(_mm256_loadu_pd(m + i), zero, _CMP_NEQ_OQ);
            _mm256_storeu_pd(out + i, _mm256_blendv_pd(c, upd, msk));
        }
        for (; i < dcur.w; ++i)
            out[i] = rouy_tourin_px(r + i, pw, m[i], tau, tau_inv_h);
    }
}

void levelset_coeffs(const Padded& u, double inv_h, double eps2,
                     Grid2D& qinv10, Grid2D& qinvm10, Grid2D& qinv01,
                     Grid2D& qinv0m1, Grid2D& qbar) {
    __m256d vinv_h = _mm256_set1_pd(inv_h);
    __m256d veps2 = _mm256_set1_pd(eps2);
    __m256d one = _mm256_set1_pd(1.0);
    __m256d quarter = _mm256_set1_pd(0.25);
    for (int j = 0; j < u.h; ++j) {
        const double* r = u.px(0, j);
        double* q10 = qinv10.row(j);
        double* qm10 = qinvm10.row(j);
        double* q01 = qinv01.row(j);
        double* q0m1 = qinv0m1.row(j);
        double* qb = qbar.row(j);
        int i = 0;
        for (; i + 4 <= u.w; i += 4) {
            DiamondGradsV g = diamond_v(r + i, u.pw, vinv_h);
            __m256d n10 = _mm256_add_pd(_mm256_mul_pd(g.gx10, g.gx10), _mm256_mul_pd(g.gy10, g.gy10));
            __m256d nm10 =
                _mm256_add_pd(_mm256_mul_pd(g.gxm10, g.gxm10), _mm256_mul_pd(g.gym10, g.gym10));
            __m256d n01 = _mm256_add_pd(_mm256_mul_pd(g.gx01, g.gx01), _mm256_mul_pd(g.gy01, g.gy01));
            __m256d n0m1 =
                _mm256_add_pd(_mm256_mul_pd(g.gx0m1, g.gx0m1), _mm256_mul_pd(g.gy0m1, g.gy0m1));
            _mm256_storeu_pd(q10 + i, _mm256_div_pd(one, _mm256_sqrt_pd(_mm256_add_pd(veps2, n10))));
            _mm256_storeu_pd(qm10 + i, _mm256_div_pd(one, _mm256_sqrt_pd(_mm256_add_pd(veps2, nm10))));
            _mm256_storeu_pd(q01 + i, _mm256_div_pd(one, _mm256_sqrt_pd(_mm256_add_pd(veps2, n01))));
            _mm256_storeu_pd(q0m1 + i,
                             _mm256_div_pd(one, _mm256_sqrt_pd(_mm256_add_pd(veps2, n0m1))));
            __m256d sum = _mm256_add_pd(_mm256_add_pd(_mm256_add_pd(n10, nm10), n01), n0m1);
            _mm256_storeu_pd(qb + i,
                             _mm256_sqrt_pd(_mm256_add_pd(veps2, _mm256_mul_pd(quarter, sum))));
        }
        for (; i < u.w; ++i) {
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

const Ops* avx2_ops() {
    static const bool supported = __builtin_cpu_supports("avx2");
    if (!supported) return nullptr;
    static const Ops ops = {
        "avx2",
        &conv1d_rows,
        &conv1d_cols,
        &edge_coeffs,
        &clt_field,
        &rouy_tourin_step,
        &levelset_coeffs,
    };
    return &ops;
}

}  // namespace sttrack::kern

#else

namespace sttrack::kern {
const Ops* avx2_ops() { return nullptr; }
}  // namespace sttrack::kern

#endif
