#pragma once

#include <vector>

#include "sheathkit/errors.hpp"
#include "sheathkit/interp.hpp"
#include "sheathkit/profiles.hpp"

namespace sheathkit {

enum class PhaseRegion { DPlus, DPlusMinus, DMinus, Separatrix };

// Stationary sheath potential on [0,1] with phi(0) = 0, phi(1) = phi_b < 0,
// extended affinely outside the slab with the one-sided boundary slopes.
struct Equilibrium {
    double lambda = 0.1;
    double phi_b = -1.0;
    std::vector<double> x_grid, phi_inf, dphi_inf;
    WellPotential well;
    bool monotone_ok = true;
    bool concave_ok = true;
    double residual = 0.0;
    int newton_iterations = 0;

    quintic_table interp_;

    double phi(double x) const {
        if (x <= 0.0) return dphi_inf.front() * x;
        if (x >= 1.0) return phi_b + dphi_inf.back() * (x - 1.0);
        return interp_.eval(x);
    }
    double dphi(double x) const {
        if (x <= 0.0) return dphi_inf.front();
        if (x >= 1.0) return dphi_inf.back();
        return interp_.eval_derivative(x);
    }
    double force(double x) const { return -dphi(x); }
    // speed of the separatrix at x: sqrt(-2 phi)
    double separatrix_v(double x) const;
};

struct SolveOptions {
    int grid_size = 0; // 0 -> max(256, ceil(32 / lambda))
    double tol = 1e-11;
    int max_iter = 200;
};

Equilibrium solve_equilibrium(const WellPotential& well, double lambda,
                              const SolveOptions& opt = {});

// Discrete functional J_h(psi) = sum lambda^2/2 |psi'|^2 h + sum Q(psi) h
// over the grid (fixed end values included in the difference quotients).
double discrete_energy(const WellPotential& well, double lambda,
                       const std::vector<double>& phi, double h);

double eval_f_inf(const Equilibrium& eq, double x, double v);

PhaseRegion classify_point(const Equilibrium& eq, double x, double v,
                           double r = 0.0);

constexpr double kSeparatrixTol = 1e-12;

struct BoundsReport {
    int lower_violations = 0, upper_violations = 0;
    double worst_lower = 0.0, worst_upper = 0.0; // largest overshoot beyond tol
    double wall_gradient = 0.0;                  // dx phi(0)
    double wall_gradient_bound = 0.0;            // |phi_b| (sqrt(a)/l)/sinh(sqrt(a)/l)
    bool wall_gradient_ok = false;
    double energy_integral = 0.0;
    double energy_ratio = 0.0; // energy / lambda
    double tolerance = 0.0;
    bool pass() const {
        return lower_violations == 0 && upper_violations == 0 &&
               wall_gradient_ok;
    }
};

BoundsReport verify_equilibrium_bounds(const Equilibrium& eq,
                                       double violation_tol = 1e-6);

// Net charge int f_inf dv - n_e(phi_inf(x)) evaluated by quadrature in the
// injection variable; equals -Q'(phi_inf(x)).
double charge_density(const Equilibrium& eq, double x);

struct QuasineutralityRow {
    double lambda = 0.0;
    double norm = 0.0;
};

std::vector<QuasineutralityRow>
quasineutrality_scan(const WellPotential& well,
                     const std::vector<double>& lambdas, double p,
                     const SolveOptions& opt = {});

} // namespace sheathkit
