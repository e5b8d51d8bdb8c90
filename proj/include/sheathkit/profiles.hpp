#pragma once

#include <vector>

#include "sheathkit/errors.hpp"
#include "sheathkit/interp.hpp"

namespace sheathkit {

// Electron density closure n_e(psi). Boltzmann: n0 * exp(psi). Tabulated
// data is interpolated with monotone cubics so n_e' keeps its sign.
struct ElectronModel {
    enum class Kind { Boltzmann, Tabulated };
    Kind kind = Kind::Boltzmann;
    double n0 = 1.0;
    std::vector<double> tab_psi, tab_ne, tab_slope;

    static ElectronModel boltzmann(double n0);
    static ElectronModel tabulated(std::vector<double> psi,
                                   std::vector<double> ne);

    double density(double psi) const;
    double density_derivative(double psi) const;
    // antiderivative N_e with N_e(0) = 0
    double density_antiderivative(double psi) const;
};

// Ion injection profile mu(v) on a compact support (r_lo, r_hi), C^1 with
// mu(r_lo) = mu'(r_lo) = 0. The bump family is
//   mu(v) = amplitude * exp(-1 / (1 - z^2)),  z = (v - center) / width.
struct InjectionProfile {
    double r_lo = 1.0, r_hi = 2.0;
    double center = 1.5, width = 0.5, amplitude = 0.0;

    // amplitude chosen so the quadrature mass equals `mass`
    static InjectionProfile bump(double center, double width, double mass);
    static InjectionProfile bump_amplitude(double center, double width,
                                           double amplitude);
    static InjectionProfile zero();

    double mu(double v) const;
    double mu_prime(double v) const;
    double total_mass() const;
};

// L1 norm of mu' on (r, +infinity).
double mu_prime_l1(const InjectionProfile& profile, double r);

struct HypothesisReport {
    double neutrality_residual = 0.0; // |int mu - n_e(0)|
    double bohm_margin = 0.0;         // n_e'(0) - int mu / v^2
    double concavity_worst = 0.0;     // max second difference of e^{-s} n_e(s)
    bool neutrality_ok = false;
    bool bohm_ok = false;
    bool concavity_ok = false;
    bool positivity_ok = false;
    bool monotone_ok = false;
    bool pass() const {
        return neutrality_ok && bohm_ok && concavity_ok && positivity_ok &&
               monotone_ok;
    }
};

HypothesisReport check_hypotheses(const ElectronModel& model,
                                  const InjectionProfile& profile,
                                  double phi_b,
                                  double neutrality_tol = 1e-8);

// Exact (quadrature) evaluators of the well potential derivatives:
//   Q'(s)  = n_e(s) - int mu(w) w / sqrt(w^2 - 2s) dw
//   Q''(s) = n_e'(s) - int mu(w) w / (w^2 - 2s)^{3/2} dw
// Regular for s <= 0 since supp mu stays away from w = 0.
double q_prime_exact(const ElectronModel& model, const InjectionProfile& profile,
                     double s);
double q_second_exact(const ElectronModel& model,
                      const InjectionProfile& profile, double s);

// Q sampled on [phi_b, 0] with curvature constants
//   alpha = inf Q'(s)/s,  beta = sup Q'(s)/s   (value Q''(0) at s = 0).
struct WellPotential {
    double phi_b = -1.0;
    double alpha = 0.0, beta = 0.0;
    double zero_slope_residual = 0.0; // |Q'(0)|, ~0 under neutrality
    double sampling_tol = 0.0;        // resolution of the alpha/beta scan
    ElectronModel model;
    InjectionProfile profile;

    double q_prime(double s) const { return table_.eval(s); }
    double q_second(double s) const { return table_.eval_derivative(s); }
    double q(double s) const;

    // set by build_well
    hermite_table table_;          // Q' values with Q'' slopes
    std::vector<double> q_nodes_;  // Q at the table nodes, Q(0) = 0
};

struct WellBuildOptions {
    int n_table = 1025;
    int n_scan = 10000;
    double quad_tol = 1e-11;
};

WellPotential build_well(const ElectronModel& model,
                         const InjectionProfile& profile, double phi_b,
                         const WellBuildOptions& opt = {});

} // namespace sheathkit
