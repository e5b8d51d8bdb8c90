#include "sheathkit/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "sheathkit/quadrature.hpp"
#include "sheathkit/roots.hpp"

namespace sheathkit {

ElectronModel ElectronModel::boltzmann(double n0) {
    ElectronModel m;
    m.kind = Kind::Boltzmann;
    m.n0 = n0;
    return m;
}

ElectronModel ElectronModel::tabulated(std::vector<double> psi,
                                       std::vector<double> ne) {
    if (psi.size() != ne.size() || psi.size() < 4)
        throw validation_error("electron_table", "need >= 4 sorted knots");
    for (size_t i = 1; i < psi.size(); ++i)
        if (psi[i] <= psi[i - 1])
            throw validation_error("electron_table", "knots not sorted");
    ElectronModel m;
    m.kind = Kind::Tabulated;
    m.tab_slope = pchip_slopes(psi, ne);
    m.tab_psi = std::move(psi);
    m.tab_ne = std::move(ne);
    return m;
}

double ElectronModel::density(double psi) const {
    if (kind == Kind::Boltzmann) return n0 * std::exp(psi);
    return pchip_eval(tab_psi, tab_ne, tab_slope, psi);
}

double ElectronModel::density_derivative(double psi) const {
    if (kind == Kind::Boltzmann) return n0 * std::exp(psi);
    return pchip_eval_derivative(tab_psi, tab_ne, tab_slope, psi);
}

double ElectronModel::density_antiderivative(double psi) const {
    if (kind == Kind::Boltzmann) return n0 * (std::exp(psi) - 1.0);
    // cumulative quadrature from 0; tabulated ranges are small, adaptive is fine
    const double sign = psi >= 0.0 ? 1.0 : -1.0;
    const double lo = std::min(0.0, psi), hi = std::max(0.0, psi);
    if (lo == hi) return 0.0;
    return sign * integrate([this](double s) { return density(s); }, lo, hi,
                            1e-12, 1e-14);
}

namespace {
// int_{-1}^{1} exp(-1/(1-z^2)) dz
constexpr double kBumpUnitIntegral = 0.44399381616807943782;
} // namespace

InjectionProfile InjectionProfile::bump(double center, double width,
                                        double mass) {
    InjectionProfile p;
    p.center = center;
    p.width = width;
    p.amplitude = mass / (width * kBumpUnitIntegral);
    p.r_lo = center - width;
    p.r_hi = center + width;
    if (p.r_lo <= 0.0)
        throw validation_error("mu", "support must satisfy 0 < r_lo < r_hi");
    return p;
}

InjectionProfile InjectionProfile::bump_amplitude(double center, double width,
                                                  double amplitude) {
    InjectionProfile p = bump(center, width, 1.0);
    p.amplitude = amplitude;
    return p;
}

InjectionProfile InjectionProfile::zero() {
    InjectionProfile p;
    p.r_lo = 1.0;
    p.r_hi = 2.0;
    p.center = 1.5;
    p.width = 0.5;
    p.amplitude = 0.0;
    return p;
}

double InjectionProfile::mu(double v) const {
    const double z = (v - center) / width;
    const double g = 1.0 - z * z;
    if (g <= 0.0) return 0.0;
    return amplitude * std::exp(-1.0 / g);
}

double InjectionProfile::mu_prime(double v) const {
    const double z = (v - center) / width;
    const double g = 1.0 - z * z;
    if (g <= 0.0) return 0.0;
    return amplitude * std::exp(-1.0 / g) * (-2.0 * z / (g * g)) / width;
}

double InjectionProfile::total_mass() const {
    return amplitude * width * kBumpUnitIntegral;
}

double mu_prime_l1(const InjectionProfile& profile, double r) {
    const double lo = std::max(r, profile.r_lo);
    if (lo >= profile.r_hi) return 0.0;
    // |mu'| is smooth except at the peak; split there
    double total = 0.0;
    const double peak = profile.center;
    auto f = [&](double v) { return std::abs(profile.mu_prime(v)); };
    if (lo < peak) {
        total += integrate(f, lo, peak, 1e-12, 1e-15);
        total += integrate(f, peak, profile.r_hi, 1e-12, 1e-15);
    } else {
        total += integrate(f, lo, profile.r_hi, 1e-12, 1e-15);
    }
    return total;
}

HypothesisReport check_hypotheses(const ElectronModel& model,
                                  const InjectionProfile& profile, double phi_b,
                                  double neutrality_tol) {
    if (!(phi_b < 0.0))
        throw validation_error("phi_b", "must be negative");
    HypothesisReport rep;

    const int n_samples = 2001;
    const double h = -phi_b / (n_samples - 1);
    double prev2 = 0.0, prev1 = 0.0;
    rep.positivity_ok = true;
    rep.monotone_ok = true;
    rep.concavity_worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double s = phi_b + i * h;
        const double ne = model.density(s);
        if (!(ne > 0.0))
            throw non_positive_density("n_e <= 0 at psi = " + std::to_string(s));
        if (!(model.density_derivative(s) > 0.0)) rep.monotone_ok = false;
        const double g = std::exp(-s) * ne;
        if (i >= 2) {
            const double second = (g - 2.0 * prev1 + prev2) / (h * h);
            rep.concavity_worst = std::max(rep.concavity_worst, second);
        }
        prev2 = prev1;
        prev1 = g;
    }
    rep.concavity_ok = rep.concavity_worst <= 1e-6;

    const double mass =
        integrate([&](double v) { return profile.mu(v); }, profile.r_lo,
                  profile.r_hi, 1e-12, 1e-15);
    rep.neutrality_residual = std::abs(mass - model.density(0.0));
    rep.neutrality_ok = rep.neutrality_residual <= neutrality_tol;

    const double bohm_integral =
        integrate([&](double v) { return profile.mu(v) / (v * v); },
                  profile.r_lo, profile.r_hi, 1e-12, 1e-15);
    rep.bohm_margin = model.density_derivative(0.0) - bohm_integral;
    rep.bohm_ok = rep.bohm_margin > 0.0;
    return rep;
}

double q_prime_exact(const ElectronModel& model,
                     const InjectionProfile& profile, double s) {
    double ion = 0.0;
    if (profile.amplitude != 0.0) {
        ion = integrate(
            [&](double w) { return profile.mu(w) * w / std::sqrt(w * w - 2.0 * s); },
            profile.r_lo, profile.r_hi, 1e-12, 1e-15);
    }
    return model.density(s) - ion;
}

double q_second_exact(const ElectronModel& model,
                      const InjectionProfile& profile, double s) {
    double ion = 0.0;
    if (profile.amplitude != 0.0) {
        ion = integrate(
            [&](double w) {
                const double d = w * w - 2.0 * s;
                return profile.mu(w) * w / (d * std::sqrt(d));
            },
            profile.r_lo, profile.r_hi, 1e-12, 1e-15);
    }
    return model.density_derivative(s) - ion;
}

double WellPotential::q(double s) const {
    const double h = table_.h;
    const size_t n = table_.y.size();
    double u = (s - table_.s0) / h;
    size_t i = static_cast<size_t>(
        std::clamp(std::floor(u), 0.0, static_cast<double>(n - 2)));
    const double t = u - i;
    // exact integral of the cubic Hermite segment from node i to s
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    const double i00 = t - t3 + 0.5 * t4;
    const double i10 = 0.5 * t2 - (2.0 / 3.0) * t3 + 0.25 * t4;
    const double i01 = t3 - 0.5 * t4;
    const double i11 = 0.25 * t4 - t3 / 3.0;
    const double seg = h * (i00 * table_.y[i] + h * i10 * table_.dy[i] +
                            i01 * table_.y[i + 1] + h * i11 * table_.dy[i + 1]);
    return q_nodes_[i] + seg;
}

WellPotential build_well(const ElectronModel& model,
                         const InjectionProfile& profile, double phi_b,
                         const WellBuildOptions& opt) {
    if (!(phi_b < 0.0))
        throw validation_error("phi_b", "must be negative");
    WellPotential well;
    well.phi_b = phi_b;
    well.model = model;
    well.profile = profile;

    const int n = opt.n_table;
    well.table_.s0 = phi_b;
    well.table_.h = -phi_b / (n - 1);
    well.table_.y.resize(n);
    well.table_.dy.resize(n);
    for (int i = 0; i < n; ++i) {
        const double s = phi_b + i * well.table_.h;
        well.table_.y[i] = q_prime_exact(model, profile, s);
        well.table_.dy[i] = q_second_exact(model, profile, s);
    }
    well.zero_slope_residual = std::abs(well.table_.y[n - 1]);

    // Q by exact segment integrals of the Hermite table, accumulated from 0
    well.q_nodes_.assign(n, 0.0);
    const double h = well.table_.h;
    for (int i = n - 2; i >= 0; --i) {
        const double seg =
            h * (0.5 * (well.table_.y[i] + well.table_.y[i + 1]) +
                 h * (well.table_.dy[i] - well.table_.dy[i + 1]) / 12.0);
        well.q_nodes_[i] = well.q_nodes_[i + 1] - seg;
    }

    // curvature constants: scan Q'(s)/s on a uniform + log-clustered grid,
    // then refine the extrema against the exact evaluators
    const int n_half = opt.n_scan / 2;
    std::vector<double> svals;
    svals.reserve(opt.n_scan + 1);
    for (int i = 0; i < n_half; ++i)
        svals.push_back(phi_b + (i + 0.5) * (-phi_b) / n_half);
    const double log_lo = std::log(-phi_b * 1e-8), log_hi = std::log(-phi_b);
    for (int i = 0; i < n_half; ++i) {
        const double m = log_lo + (log_hi - log_lo) * i / (n_half - 1.0);
        svals.push_back(-std::exp(m));
    }
    std::sort(svals.begin(), svals.end());
    svals.erase(std::unique(svals.begin(), svals.end()), svals.end());

    auto ratio = [&](double s) {
        if (s == 0.0) return q_second_exact(model, profile, 0.0);
        return q_prime_exact(model, profile, s) / s;
    };
    double rmin = ratio(phi_b), rmax = rmin;
    double smin = phi_b, smax = phi_b;
    std::vector<double> rv(svals.size());
    for (size_t i = 0; i < svals.size(); ++i) {
        rv[i] = well.q_prime(svals[i]) / svals[i]; // fast scan on the table
        if (rv[i] < rmin) {
            rmin = rv[i];
            smin = svals[i];
        }
        if (rv[i] > rmax) {
            rmax = rv[i];
            smax = svals[i];
        }
    }
    const double r0 = ratio(0.0);
    if (r0 < rmin) {
        rmin = r0;
        smin = 0.0;
    }
    if (r0 > rmax) {
        rmax = r0;
        smax = 0.0;
    }
    auto refine = [&](double s_star, int sign) {
        // golden-section around the sampled extremum using exact evaluations
        auto it = std::lower_bound(svals.begin(), svals.end(), s_star);
        double lo = s_star, hi = s_star;
        if (it != svals.begin()) lo = *(it - 1);
        if (it + 1 < svals.end()) hi = *(it + 1);
        if (lo >= hi) return sign * ratio(s_star);
        const double s_opt = golden_min(
            [&](double s) { return sign * ratio(s); }, lo, std::min(hi, -1e-14),
            1e-12);
        return sign * ratio(s_opt);
    };
    if (smin < 0.0) rmin = std::min(rmin, refine(smin, +1));
    if (smax < 0.0) rmax = std::max(rmax, -refine(smax, -1));
    well.alpha = std::min(rmin, r0);
    well.beta = std::max(rmax, r0);
    well.sampling_tol = -phi_b / n_half;

    if (!(well.alpha > 0.0))
        throw curvature_degenerate(
            "well curvature alpha <= 0 (Bohm condition violated numerically)");
    return well;
}

} // namespace sheathkit
