#pragma once

#include <cmath>
#include <string>

#include "sttrack/errors.hpp"
#include "sttrack/grid.hpp"

namespace sttrack {

// Five-point semi-implicit system
//   (1 + sum_e c_e) x_ij - sum_e c_e x_nb(e) = b_ij
// with per-pixel edge coefficients c (zero across the frame boundary, which
// is the zero-flux mirror condition). Solved in place by lexicographic SOR.
// Stops when the L1 residual drops below tol; throws after max_sweeps.
inline int sor_solve_5pt(const Grid2D& c10, const Grid2D& cm10, const Grid2D& c01,
                         const Grid2D& c0m1, const Grid2D& b, Grid2D& x, double omega,
                         double tol, int max_sweeps, const char* what) {
    const int w = x.w, h = x.h;
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        double res = 0.0;
        for (int j = 0; j < h; ++j) {
            double* xr = x.row(j);
            const double* xu = j > 0 ? x.row(j - 1) : nullptr;
            const double* xd = j < h - 1 ? x.row(j + 1) : nullptr;
            const double* e = c10.row(j);
            const double* wst = cm10.row(j);
            const double* n = c01.row(j);
            const double* s = c0m1.row(j);
            const double* br = b.row(j);
            for (int i = 0; i < w; ++i) {
                double ce = i < w - 1 ? e[i] : 0.0;
                double cw = i > 0 ? wst[i] : 0.0;
                double cn = xd ? n[i] : 0.0;
                double cs = xu ? s[i] : 0.0;
                double diag = 1.0 + ce + cw + cn + cs;
                double off = 0.0;
                if (i < w - 1) off += ce * xr[i + 1];
                if (i > 0) off += cw * xr[i - 1];
                if (xd) off += cn * xd[i];
                if (xu) off += cs * xu[i];
                double r = br[i] + off - diag * xr[i];
                res += std::fabs(r);
                xr[i] += omega * r / diag;
            }
        }
        if (res < tol) return sweep;
    }
    // one more residual pass with the final iterate for the error report
    double res = 0.0;
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            double ce = i < w - 1 ? c10.at(i, j) : 0.0;
            double cw = i > 0 ? cm10.at(i, j) : 0.0;
            double cn = j < h - 1 ? c01.at(i, j) : 0.0;
            double cs = j > 0 ? c0m1.at(i, j) : 0.0;
            double off = 0.0;
            if (i < w - 1) off += ce * x.at(i + 1, j);
            if (i > 0) off += cw * x.at(i - 1, j);
            if (j < h - 1) off += cn * x.at(i, j + 1);
            if (j > 0) off += cs * x.at(i, j - 1);
            res += std::fabs(b.at(i, j) + off - (1.0 + ce + cw + cn + cs) * x.at(i, j));
        }
    throw SolverError(std::string(what) + ": SOR did not converge in " +
                          std::to_string(max_sweeps) + " sweeps (residual " +
                          std::to_string(res) + ")",
                      res, max_sweeps);
}

}  // namespace sttrack
