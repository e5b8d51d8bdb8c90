#include "sheathkit/interp.hpp"

namespace sheathkit {

std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
    const size_t n = x.size();
    std::vector<double> d(n, 0.0);
    if (n < 2) return d;
    std::vector<double> h(n - 1), delta(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
        d[0] = d[1] = delta[0];
        return d;
    }
    for (size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // one-sided ends, clipped to keep monotonicity
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 <= 0.0 && std::abs(s) > 3.0 * std::abs(d0))
            s = 3.0 * d0;
        return s;
    };
    d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

static size_t bracket(const std::vector<double>& x, double s) {
    if (s <= x.front()) return 0;
    if (s >= x[x.size() - 2]) return x.size() - 2;
    size_t lo = 0, hi = x.size() - 1;
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        (x[mid] <= s ? lo : hi) = mid;
    }
    return lo;
}

double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& d, double s) {
    const size_t i = bracket(x, s);
    const double h = x[i + 1] - x[i];
    const double t = std::clamp((s - x[i]) / h, 0.0, 1.0);
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y[i] + h * (t3 - 2 * t2 + t) * d[i] +
           (-2 * t3 + 3 * t2) * y[i + 1] + h * (t3 - t2) * d[i + 1];
}

double pchip_eval_derivative(const std::vector<double>& x,
                             const std::vector<double>& y,
                             const std::vector<double>& d, double s) {
    const size_t i = bracket(x, s);
    const double h = x[i + 1] - x[i];
    const double t = std::clamp((s - x[i]) / h, 0.0, 1.0);
    const double t2 = t * t;
    return ((6 * t - 6 * t2) * (y[i + 1] - y[i]) / h +
            (3 * t2 - 4 * t + 1) * d[i] + (3 * t2 - 2 * t) * d[i + 1]);
}

} // namespace sheathkit
