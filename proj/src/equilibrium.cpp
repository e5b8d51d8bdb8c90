#include "sheathkit/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "sheathkit/quadrature.hpp"
#include "sheathkit/tridiag.hpp"

namespace sheathkit {

namespace {

// sinh(sqrt(g) x / l) / sinh(sqrt(g) / l), stable for large arguments
double sinh_ratio(double g, double x, double lambda) {
    const double a = std::sqrt(g) / lambda;
    if (a < 30.0) return std::sinh(a * x) / std::sinh(a);
    return std::exp(a * (x - 1.0)) * (1.0 - std::exp(-2.0 * a * x)) /
           (1.0 - std::exp(-2.0 * a));
}

std::vector<double> fourth_order_gradient(const std::vector<double>& f,
                                          double h) {
    const size_t n = f.size();
    std::vector<double> d(n);
    d[0] = (-25 * f[0] + 48 * f[1] - 36 * f[2] + 16 * f[3] - 3 * f[4]) /
           (12 * h);
    d[1] = (-3 * f[0] - 10 * f[1] + 18 * f[2] - 6 * f[3] + f[4]) / (12 * h);
    for (size_t i = 2; i + 2 < n; ++i)
        d[i] = (f[i - 2] - 8 * f[i - 1] + 8 * f[i + 1] - f[i + 2]) / (12 * h);
    d[n - 2] = (3 * f[n - 1] + 10 * f[n - 2] - 18 * f[n - 3] + 6 * f[n - 4] -
                f[n - 5]) /
               (12 * h);
    d[n - 1] = (25 * f[n - 1] - 48 * f[n - 2] + 36 * f[n - 3] -
                16 * f[n - 4] + 3 * f[n - 5]) /
               (12 * h);
    return d;
}

} // namespace

double Equilibrium::separatrix_v(double x) const {
    return std::sqrt(std::max(-2.0 * phi(x), 0.0));
}

double discrete_energy(const WellPotential& well, double lambda,
                       const std::vector<double>& phi, double h) {
    const size_t n = phi.size();
    double e = 0.0;
    for (size_t i = 0; i + 1 < n; ++i) {
        const double d = (phi[i + 1] - phi[i]) / h;
        e += 0.5 * lambda * lambda * d * d * h;
    }
    for (size_t i = 1; i + 1 < n; ++i) e += well.q(phi[i]) * h;
    return e;
}

Equilibrium solve_equilibrium(const WellPotential& well, double lambda,
                              const SolveOptions& opt) {
    if (!(lambda > 0.0)) throw validation_error("lambda", "must be positive");
    int n = opt.grid_size;
    if (n == 0)
        n = std::max(256, static_cast<int>(std::ceil(32.0 / lambda)));
    if (n < 64) throw validation_error("grid_size", "must be >= 64");

    Equilibrium eq;
    eq.lambda = lambda;
    eq.phi_b = well.phi_b;
    eq.well = well;
    const double h = 1.0 / (n - 1);
    eq.x_grid.resize(n);
    for (int i = 0; i < n; ++i) eq.x_grid[i] = i * h;

    std::vector<double>& phi = eq.phi_inf;
    phi.resize(n);
    const double gamma = 0.5 * (well.alpha + well.beta);
    for (int i = 0; i < n; ++i)
        phi[i] = well.phi_b * sinh_ratio(gamma, eq.x_grid[i], lambda);
    phi[0] = 0.0;
    phi[n - 1] = well.phi_b;

    const double l2 = lambda * lambda;
    const double inv_h2 = 1.0 / (h * h);
    const int m = n - 2; // interior unknowns
    std::vector<double> F(m), diag(m), lower(m), upper(m), delta(m);
    std::vector<double> trial(n);

    double scale = 0.0;
    for (double y : well.table_.y) scale = std::max(scale, std::abs(y));
    scale = std::max(scale, 1e-30);
    const double tol = opt.tol * scale;

    auto residual_fill = [&](const std::vector<double>& p) {
        double norm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            const double lap = (p[i + 2] - 2.0 * p[i + 1] + p[i]) * inv_h2;
            F[i] = -l2 * lap + well.q_prime(p[i + 1]);
            norm2 += F[i] * F[i] * h;
        }
        return std::sqrt(norm2);
    };

    double res = residual_fill(phi);
    double energy = discrete_energy(well, lambda, phi, h);
    int iter = 0;
    for (; iter < opt.max_iter && res > tol; ++iter) {
        for (int i = 0; i < m; ++i) {
            diag[i] = 2.0 * l2 * inv_h2 + well.q_second(phi[i + 1]);
            lower[i] = upper[i] = -l2 * inv_h2;
            delta[i] = -F[i];
        }
        solve_tridiag(lower, diag, upper, delta);

        // directional derivative of J_h along delta (gradient is h * F)
        double slope = 0.0;
        for (int i = 0; i < m; ++i) slope += h * F[i] * delta[i];

        double tau = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < 30; ++bt) {
            trial = phi;
            for (int i = 0; i < m; ++i)
                trial[i + 1] = std::clamp(phi[i + 1] + tau * delta[i],
                                          well.phi_b, 0.0);
            const double e_new = discrete_energy(well, lambda, trial, h);
            if (e_new <= energy + 1e-4 * tau * slope) {
                phi = trial;
                energy = e_new;
                accepted = true;
                break;
            }
            tau *= 0.5;
        }
        if (!accepted) {
            // projected gradient fallback
            double step = 1.0 / (2.0 * l2 * inv_h2 + scale);
            bool moved = false;
            for (int bt = 0; bt < 40; ++bt) {
                trial = phi;
                for (int i = 0; i < m; ++i)
                    trial[i + 1] = std::clamp(phi[i + 1] - step * h * F[i],
                                              well.phi_b, 0.0);
                const double e_new = discrete_energy(well, lambda, trial, h);
                if (e_new < energy) {
                    phi = trial;
                    energy = e_new;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved)
                throw no_convergence("equilibrium solve stalled", iter, res);
        }
        res = residual_fill(phi);
    }
    if (res > tol)
        throw no_convergence("equilibrium Newton did not reach tolerance",
                             iter, res);
    eq.residual = res;
    eq.newton_iterations = iter;

    for (int i = 0; i < n; ++i) {
        if (phi[i] < well.phi_b - 1e-12 || phi[i] > 1e-12)
            throw constraint_violation("equilibrium escaped [phi_b, 0]");
    }

    const double mono_tol = 1e-8 * std::abs(well.phi_b);
    for (int i = 0; i + 1 < n; ++i)
        if (phi[i + 1] - phi[i] > mono_tol) eq.monotone_ok = false;
    for (int i = 1; i + 1 < n; ++i)
        if (phi[i + 1] - 2.0 * phi[i] + phi[i - 1] > mono_tol)
            eq.concave_ok = false;

    eq.dphi_inf = fourth_order_gradient(phi, h);
    std::vector<double> ddphi(n);
    for (int i = 0; i < n; ++i) ddphi[i] = well.q_prime(phi[i]) / l2;

    eq.interp_.x0 = 0.0;
    eq.interp_.h = h;
    eq.interp_.y = phi;
    eq.interp_.dy = eq.dphi_inf;
    eq.interp_.ddy = std::move(ddphi);
    return eq;
}

double eval_f_inf(const Equilibrium& eq, double x, double v) {
    if (v <= 0.0) return 0.0;
    const double e2 = v * v + 2.0 * eq.phi(x);
    if (e2 <= 0.0) return 0.0;
    return eq.well.profile.mu(std::sqrt(e2));
}

PhaseRegion classify_point(const Equilibrium& eq, double x, double v,
                           double r) {
    const double e2 = v * v + 2.0 * eq.phi(x);
    if (std::abs(e2) <= kSeparatrixTol) return PhaseRegion::Separatrix;
    if (v > 0.0 && e2 > r * r) return PhaseRegion::DPlus;
    if (v < 0.0 && e2 > 0.0) return PhaseRegion::DMinus;
    return PhaseRegion::DPlusMinus;
}

BoundsReport verify_equilibrium_bounds(const Equilibrium& eq,
                                       double violation_tol) {
    BoundsReport rep;
    rep.tolerance = violation_tol;
    const double l = eq.lambda;
    const double pb = std::abs(eq.phi_b);
    const size_t n = eq.x_grid.size();
    for (size_t i = 0; i < n; ++i) {
        const double x = eq.x_grid[i];
        const double mag = std::abs(eq.phi_inf[i]);
        const double lo = pb * sinh_ratio(eq.well.beta, x, l);
        const double hi = pb * sinh_ratio(eq.well.alpha, x, l);
        if (mag < lo - violation_tol) {
            ++rep.lower_violations;
            rep.worst_lower = std::max(rep.worst_lower, lo - mag);
        }
        if (mag > hi + violation_tol) {
            ++rep.upper_violations;
            rep.worst_upper = std::max(rep.worst_upper, mag - hi);
        }
    }
    rep.wall_gradient = eq.dphi_inf.front();
    const double a = std::sqrt(eq.well.alpha) / l;
    rep.wall_gradient_bound =
        (a < 30.0) ? pb * a / std::sinh(a)
                   : pb * 2.0 * a * std::exp(-a) / (1.0 - std::exp(-2.0 * a));
    rep.wall_gradient_ok = rep.wall_gradient < 0.0 &&
                           std::abs(rep.wall_gradient) <=
                               rep.wall_gradient_bound + violation_tol;

    const double h = eq.x_grid[1] - eq.x_grid[0];
    double e = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i + 1 == n) ? 0.5 * h : h;
        e += w * (0.5 * l * l * eq.dphi_inf[i] * eq.dphi_inf[i] +
                  0.5 * eq.well.alpha * eq.phi_inf[i] * eq.phi_inf[i]);
    }
    rep.energy_integral = e;
    rep.energy_ratio = e / l;
    return rep;
}

double charge_density(const Equilibrium& eq, double x) {
    return -q_prime_exact(eq.well.model, eq.well.profile, eq.phi(x));
}

std::vector<QuasineutralityRow>
quasineutrality_scan(const WellPotential& well,
                     const std::vector<double>& lambdas, double p,
                     const SolveOptions& opt) {
    std::vector<QuasineutralityRow> rows;
    for (double l : lambdas) {
        const Equilibrium eq = solve_equilibrium(well, l, opt);
        const size_t n = eq.x_grid.size();
        const double h = eq.x_grid[1] - eq.x_grid[0];
        double acc = 0.0;
        for (size_t i = 0; i < n; ++i) {
            const double w = (i == 0 || i + 1 == n) ? 0.5 * h : h;
            acc += w * std::pow(std::abs(charge_density(eq, eq.x_grid[i])), p);
        }
        rows.push_back({l, std::pow(acc, 1.0 / p)});
    }
    return rows;
}

} // namespace sheathkit
