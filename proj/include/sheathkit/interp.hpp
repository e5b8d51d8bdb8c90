#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace sheathkit {

// Cubic Hermite on a uniform grid from nodal values and derivatives.
struct hermite_table {
    double s0 = 0.0, h = 1.0;
    std::vector<double> y, dy;

    double lo() const { return s0; }
    double hi() const { return s0 + h * (y.size() - 1); }

    double eval(double s) const {
        const size_t n = y.size();
        double u = (s - s0) / h;
        size_t i = static_cast<size_t>(std::clamp(std::floor(u), 0.0,
                                                  static_cast<double>(n - 2)));
        const double t = u - i;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
        return h00 * y[i] + h * h10 * dy[i] + h01 * y[i + 1] + h * h11 * dy[i + 1];
    }

    double eval_derivative(double s) const {
        const size_t n = y.size();
        double u = (s - s0) / h;
        size_t i = static_cast<size_t>(std::clamp(std::floor(u), 0.0,
                                                  static_cast<double>(n - 2)));
        const double t = u - i;
        const double t2 = t * t;
        const double d00 = (6 * t2 - 6 * t) / h, d10 = 3 * t2 - 4 * t + 1;
        const double d01 = (-6 * t2 + 6 * t) / h, d11 = 3 * t2 - 2 * t;
        return d00 * y[i] + d10 * dy[i] + d01 * y[i + 1] + d11 * dy[i + 1];
    }
};

// Piecewise quintic Hermite on a uniform grid: values, first and second
// derivatives at the nodes give a C^2 interpolant with C^1 derivative.
struct quintic_table {
    double x0 = 0.0, h = 1.0;
    std::vector<double> y, dy, ddy;

    size_t segments() const { return y.size() - 1; }

    // basis on t in [0,1] scaled to segment width h
    void locate(double x, size_t& i, double& t) const {
        const double u = (x - x0) / h;
        i = static_cast<size_t>(
            std::clamp(std::floor(u), 0.0, static_cast<double>(y.size() - 2)));
        t = u - i;
    }

    double eval(double x) const {
        size_t i;
        double t;
        locate(x, i, t);
        const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
        const double H0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
        const double H1 = t - 6 * t3 + 8 * t4 - 3 * t5;
        const double H2 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
        const double H3 = 0.5 * t3 - t4 + 0.5 * t5;
        const double H4 = -4 * t3 + 7 * t4 - 3 * t5;
        const double H5 = 10 * t3 - 15 * t4 + 6 * t5;
        return H0 * y[i] + h * H1 * dy[i] + h * h * H2 * ddy[i] +
               h * h * H3 * ddy[i + 1] + h * H4 * dy[i + 1] + H5 * y[i + 1];
    }

    double eval_derivative(double x) const {
        size_t i;
        double t;
        locate(x, i, t);
        const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
        const double d0 = (-30 * t2 + 60 * t3 - 30 * t4) / h;
        const double d1 = 1 - 18 * t2 + 32 * t3 - 15 * t4;
        const double d2 = (t - 4.5 * t2 + 6 * t3 - 2.5 * t4) * h;
        const double d3 = (1.5 * t2 - 4 * t3 + 2.5 * t4) * h;
        const double d4 = -12 * t2 + 28 * t3 - 15 * t4;
        const double d5 = (30 * t2 - 60 * t3 + 30 * t4) / h;
        return d0 * y[i] + d1 * dy[i] + d2 * ddy[i] + d3 * ddy[i + 1] +
               d4 * dy[i + 1] + d5 * y[i + 1];
    }

    double eval_second_derivative(double x) const {
        size_t i;
        double t;
        locate(x, i, t);
        const double t2 = t * t, t3 = t2 * t;
        const double e0 = (-60 * t + 180 * t2 - 120 * t3) / (h * h);
        const double e1 = (-36 * t + 96 * t2 - 60 * t3) / h;
        const double e2 = 1 - 9 * t + 18 * t2 - 10 * t3;
        const double e3 = 3 * t - 12 * t2 + 10 * t3;
        const double e4 = (-24 * t + 84 * t2 - 60 * t3) / h;
        const double e5 = (60 * t - 180 * t2 + 120 * t3) / (h * h);
        return e0 * y[i] + e1 * dy[i] + e2 * ddy[i] + e3 * ddy[i + 1] +
               e4 * dy[i + 1] + e5 * y[i + 1];
    }
};

// Fritsch-Carlson monotone cubic slopes for tabulated data (non-uniform x).
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y);

// Evaluate the cubic Hermite defined by (x, y, slopes) at s, clamped to the
// table range; also the derivative.
double pchip_eval(const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<double>& d, double s);
double pchip_eval_derivative(const std::vector<double>& x,
                             const std::vector<double>& y,
                             const std::vector<double>& d, double s);

} // namespace sheathkit
