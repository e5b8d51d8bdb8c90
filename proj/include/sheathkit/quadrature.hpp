#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "sheathkit/errors.hpp"

namespace sheathkit {

// Nodes and weights on [-1,1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// Gauss-Jacobi rule for the weight (1-x)^alf * (1+x)^bet on [-1,1].
// Nodes come out in descending order (largest first).
void gauss_jacobi(int n, double alf, double bet, std::vector<double>& x,
                  std::vector<double>& w);

namespace detail {

// Kronrod 15 / Gauss 7 abscissae and weights (positive half).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kK15Weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kG7Weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
inline void gk15_panel(F&& f, double a, double b, double& value, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kGK15Nodes[i]);
        fv[14 - i] = f(c + h * kGK15Nodes[i]);
    }
    fv[7] = f(c);
    double k15 = kK15Weights[7] * fv[7];
    for (int i = 0; i < 7; ++i) k15 += kK15Weights[i] * (fv[i] + fv[14 - i]);
    double g7 = kG7Weights[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        g7 += kG7Weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    value = k15 * h;
    err = std::abs((k15 - g7) * h);
}

} // namespace detail

// Adaptive Gauss-Kronrod integration. Throws quadrature_failure when the
// panel budget is exhausted before the tolerance is met.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 1e-14) {
    if (a == b) return 0.0;
    struct Panel {
        double a, b, value, err;
    };
    double v0, e0;
    detail::gk15_panel(f, a, b, v0, e0);
    std::vector<Panel> heap{{a, b, v0, e0}};
    double total = v0, total_err = e0;
    const int max_panels = 40000;
    int used = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        // split the worst panel
        size_t worst = 0;
        for (size_t i = 1; i < heap.size(); ++i)
            if (heap[i].err > heap[worst].err) worst = i;
        Panel p = heap[worst];
        if (p.b - p.a <= std::abs(p.a) * 1e-15 + 1e-300) break;
        if (++used > max_panels)
            throw quadrature_failure("adaptive quadrature: panel budget exhausted");
        const double m = 0.5 * (p.a + p.b);
        Panel l{p.a, m, 0, 0}, r{m, p.b, 0, 0};
        detail::gk15_panel(f, l.a, l.b, l.value, l.err);
        detail::gk15_panel(f, r.a, r.b, r.value, r.err);
        total += l.value + r.value - p.value;
        total_err += l.err + r.err - p.err;
        heap[worst] = l;
        heap.push_back(r);
    }
    // fixed-order recomputation keeps the sum deterministic
    double sum = 0.0;
    for (const Panel& p : heap) sum += p.value;
    return sum;
}

// Fixed-order Gauss-Legendre on [a,b].
template <class F>
double integrate_gl(F&& f, double a, double b, const std::vector<double>& x,
                    const std::vector<double>& w) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * f(c + h * x[i]);
    return s * h;
}

// Integral of g(u)/sqrt(u - x0) over [x0, b]: Gauss-Jacobi absorbs the
// inverse-square-root endpoint. g is evaluated strictly inside (x0, b].
class inverse_sqrt_rule {
  public:
    explicit inverse_sqrt_rule(int n = 64);
    // computes int_x0^b g(u) / sqrt(u - x0) du
    template <class G>
    double apply(G&& g, double x0, double b) const {
        const double L = b - x0;
        if (L <= 0.0) return 0.0;
        double s = 0.0;
        for (size_t i = 0; i < x_.size(); ++i) {
            // map t in (-1,1), weight (1+t)^{-1/2} -> u = x0 + L*(1+t)/2
            const double u = x0 + 0.5 * L * (1.0 + x_[i]);
            s += w_[i] * g(u);
        }
        return s * std::sqrt(0.5 * L);
    }

  private:
    std::vector<double> x_, w_;
};

} // namespace sheathkit
