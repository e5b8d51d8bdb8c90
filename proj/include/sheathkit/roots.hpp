#pragma once

#include <cmath>
#include <functional>

#include "sheathkit/errors.hpp"

namespace sheathkit {

// Bisection on a bracketing interval [a,b] with f(a)*f(b) <= 0.
template <class F>
double bisect(F&& f, double a, double b, double xtol = 1e-14,
              int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw condition_violated("bisect: no sign change");
    for (int i = 0; i < max_iter; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0 || 0.5 * (b - a) < xtol) return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

// Newton with a bisection safeguard on a bracket.
template <class F, class DF>
double newton_safeguarded(F&& f, DF&& df, double a, double b,
                          double rtol = 1e-12, int max_iter = 100) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw condition_violated("newton_safeguarded: no sign change");
    double x = 0.5 * (a + b);
    for (int i = 0; i < max_iter; ++i) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fa * fx < 0.0)
            b = x;
        else {
            a = x;
            fa = fx;
        }
        const double d = df(x);
        double xn = (d != 0.0) ? x - fx / d : 0.5 * (a + b);
        if (xn <= a || xn >= b) xn = 0.5 * (a + b);
        if (std::abs(xn - x) <= rtol * (std::abs(xn) + 1e-300)) return xn;
        x = xn;
    }
    return x;
}

// Golden-section minimization on [a,b].
template <class F>
double golden_min(F&& f, double a, double b, double xtol = 1e-10,
                  int max_iter = 200) {
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace sheathkit
