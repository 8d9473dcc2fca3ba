#pragma once

#include "pagamma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

namespace pagamma {

/// Outcome of a bracketing root search. [lo, hi] always contains the sign
/// change of f; `root` is the endpoint with the smaller |f|.
struct RootBracket {
    double root = 0.0;
    double f_root = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t iterations = 0;

    double width() const { return hi - lo; }
};

namespace detail {

inline std::string fmt_interval(double lo, double hi) {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

} // namespace detail

/// Plain bisection on [lo, hi] until the bracket is narrower than `width`.
/// Throws SolverFailure if f(lo) and f(hi) have the same sign.
template <class F>
RootBracket bisect(F&& f, double lo, double hi, double width, std::size_t max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, flo, lo, lo, 0};
    if (fhi == 0.0) return {hi, fhi, hi, hi, 0};
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw SolverFailure("bisect: no sign change on " + detail::fmt_interval(lo, hi));
    }
    std::size_t it = 0;
    while (hi - lo > width && it < max_iter) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double fmid = f(mid);
        ++it;
        if (fmid == 0.0) return {mid, fmid, mid, mid, it};
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    const bool lo_better = std::fabs(flo) <= std::fabs(fhi);
    return {lo_better ? lo : hi, lo_better ? flo : fhi, lo, hi, it};
}

/// Brent's method (inverse quadratic interpolation safeguarded by
/// bisection). Terminates once the bracket half-width is below
/// 2 eps |root| + tol / 2, so the returned bracket is at most about `tol`
/// wide. Throws SolverFailure without a sign change or after `max_iter`.
template <class F>
RootBracket brent(F&& f, double lo, double hi, double tol, std::size_t max_iter = 200) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, fa, a, a, 0};
    if (fb == 0.0) return {b, fb, b, b, 0};
    if ((fa > 0.0) == (fb > 0.0)) {
        throw SolverFailure("brent: no sign change on " + detail::fmt_interval(lo, hi));
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) {
            const double blo = fb == 0.0 ? b : std::min(b, c);
            const double bhi = fb == 0.0 ? b : std::max(b, c);
            return {b, fb, blo, bhi, it};
        }
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw SolverFailure("brent: no convergence after " + std::to_string(max_iter) + " iterations");
}

/// Bisection down to `coarse_width`, then Brent on the surviving bracket.
template <class F>
RootBracket bisect_then_brent(F&& f, double lo, double hi, double coarse_width, double tol) {
    RootBracket coarse = bisect(f, lo, hi, coarse_width);
    if (coarse.width() <= tol) return coarse;
    RootBracket fine = brent(f, coarse.lo, coarse.hi, tol);
    fine.iterations += coarse.iterations;
    return fine;
}

} // namespace pagamma
