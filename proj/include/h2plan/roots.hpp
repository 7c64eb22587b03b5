#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "h2plan/error.hpp"

namespace h2plan::roots {

struct BrentResult {
    double x;
    double fx;
    std::size_t iterations;
};

/**
 * Brent's method (inverse quadratic interpolation / secant with bisection
 * safeguard) on a bracket [a, b] with f(a), f(b) of opposite sign.
 *
 * Stops when |f| <= ftol or the bracket shrinks below xtol. Throws
 * ConvergenceError if the bracket is invalid or max_iter is exhausted.
 */
template <class F>
BrentResult brent(F&& f, double a, double b, double fa, double fb, double xtol, double ftol,
                  std::size_t max_iter = 200) {
    if (!(fa * fb <= 0.0)) {
        throw ConvergenceError("root not bracketed");
    }
    if (fa == 0.0) return {a, fa, 0};
    if (fb == 0.0) return {b, fb, 0};

    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || std::abs(fb) <= ftol) {
            return {b, fb, iter};
        }
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p;
            double q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            } else {
                p = -p;
            }
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = d;
            }
        } else {
            d = m;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw ConvergenceError("Brent iteration limit reached");
}

template <class F>
BrentResult brent(F&& f, double a, double b, double xtol, double ftol, std::size_t max_iter = 200) {
    const double fa = f(a);
    const double fb = f(b);
    return brent(std::forward<F>(f), a, b, fa, fb, xtol, ftol, max_iter);
}

}  // namespace h2plan::roots
