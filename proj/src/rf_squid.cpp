#include "fluxq/rf_squid.hpp"

#include <algorithm>
#include <cmath>

namespace fluxq {

using constants::phi0;
namespace {
constexpr double kPi = std::numbers::pi;
}

double RfSquidParams::critical_current() const {
    return beta * phi0 / (2.0 * kPi * L);
}

void RfSquidParams::validate() const {
    if (!(L > 0.0)) throw RangeError("rf-squid: L must be positive");
    if (!(C > 0.0)) throw RangeError("rf-squid: C must be positive");
    if (!(beta >= 0.0)) throw RangeError("rf-squid: beta must be non-negative");
    if (!std::isfinite(phi_err)) throw RangeError("rf-squid: phi_err must be finite");
}

RfSquidEnergies RfSquidEnergies::from(const RfSquidParams& p) {
    p.validate();
    RfSquidEnergies e;
    e.E_J = p.critical_current() * phi0 / (2.0 * kPi);
    e.E_C = 4.0 * constants::e_charge * constants::e_charge / (2.0 * p.C);
    const double phi0_over_2pi = phi0 / (2.0 * kPi);
    e.E_L = phi0_over_2pi * phi0_over_2pi / (2.0 * p.L);
    e.alpha = e.E_L / e.E_C;
    return e;
}

double potential(double phi, const RfSquidParams& params) {
    const auto en = RfSquidEnergies::from(params);
    return phi * phi / (2.0 * params.L) +
           en.E_J * std::cos(2.0 * kPi * (phi + params.phi_err) / phi0);
}

double dimensionless_potential(double theta, double alpha, double beta) {
    return alpha * theta * theta + 2.0 * alpha * beta * std::cos(theta);
}

double solve_delta_phi(const RfSquidParams& params) {
    params.validate();
    const double beta = params.beta;
    if (beta <= 1.0)
        throw NoDoubleWell("solve_delta_phi: beta <= 1 has no double well");

    // f(x) = x - beta sin x:  f < 0 just above 0 (since beta > 1), f(pi) > 0.
    auto f = [beta](double x) { return x - beta * std::sin(x); };
    double lo = 1e-15, hi = kPi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    // Newton polish
    for (int i = 0; i < 4; ++i) {
        const double d = 1.0 - beta * std::cos(x);
        if (d == 0.0) break;
        x -= f(x) / d;
    }
    return x / kPi * phi0;
}

double delta_phi_sensitivity(const RfSquidParams& params) {
    const double x = solve_delta_phi(params) * kPi / phi0;
    const double denom = 1.0 - params.beta * std::cos(x);
    if (std::abs(denom) < 1e-12)
        throw SingularSensitivity("delta_phi_sensitivity: 1 - beta cos(x) underflows");
    // beta/x * dx/dbeta with dx/dbeta = sin(x)/(1 - beta cos x) and sin(x) = x/beta
    return 1.0 / denom;
}

double barrier_height(const RfSquidParams& params) {
    const double dphi = solve_delta_phi(params);
    const double x = dphi * kPi / phi0;
    const auto en = RfSquidEnergies::from(params);
    // U(0) - U(dphi/2) at phi_err = 0
    return en.E_J * (1.0 - std::cos(x)) - dphi * dphi / (8.0 * params.L);
}

double barrier_height_asymptotic(const RfSquidParams& params) {
    const auto en = RfSquidEnergies::from(params);
    return 2.0 * en.E_J * (1.0 - kPi * kPi / (4.0 * params.beta));
}

double bias_error_energy(const RfSquidParams& params) {
    if (std::abs(params.phi_err) >= 0.01 * phi0)
        throw PerturbationInvalid("bias_error_energy: |phi_err| must be < 0.01 phi0");
    if (params.phi_err == 0.0) return 0.0;
    const double dphi = solve_delta_phi(params);
    return dphi / params.L * params.phi_err;
}

namespace {

struct Grid {
    double step = 0.0;
    int n = 0;                // number of intervals; points 0..n
    std::vector<double> pot;  // dimensionless potential at grid points
};

Grid make_grid(double alpha, double beta, double grid_step, double theta_max) {
    Grid g;
    g.n = std::max(8, static_cast<int>(std::lround(theta_max / grid_step)));
    g.step = theta_max / g.n;
    g.pot.resize(g.n + 1);
    for (int i = 0; i <= g.n; ++i)
        g.pot[i] = dimensionless_potential(i * g.step, alpha, beta);
    return g;
}

// Numerov integration of psi'' = (V - E) psi from theta = 0 outwards with the
// requested parity; returns psi(theta_max) up to a positive scale factor.
double shoot(double energy, bool even, const Grid& g,
             std::vector<double>* wavefunction = nullptr) {
    const double d2 = g.step * g.step;
    auto f = [&](int i) { return 1.0 - d2 / 12.0 * (g.pot[i] - energy); };

    double psi_prev, psi_cur;
    if (even) {
        psi_prev = 1.0;
        psi_cur = (12.0 - 10.0 * f(0)) * psi_prev / (2.0 * f(1));
    } else {
        psi_prev = 0.0;
        psi_cur = g.step;
    }
    if (wavefunction) {
        wavefunction->assign(g.n + 1, 0.0);
        (*wavefunction)[0] = psi_prev;
        (*wavefunction)[1] = psi_cur;
    }
    double scale_applied = 1.0;
    for (int i = 1; i < g.n; ++i) {
        const double psi_next =
            ((12.0 - 10.0 * f(i)) * psi_cur - f(i - 1) * psi_prev) / f(i + 1);
        psi_prev = psi_cur;
        psi_cur = psi_next;
        if (std::abs(psi_cur) > 1e250) {
            psi_prev *= 1e-250;
            psi_cur *= 1e-250;
            scale_applied *= 1e-250;
            if (wavefunction)
                for (double& v : *wavefunction) v *= 1e-250;
        }
        if (wavefunction) (*wavefunction)[i + 1] = psi_cur;
    }
    (void)scale_applied;
    return psi_cur;
}

double bisect_level(double e_lo, double e_hi, bool even, const Grid& g,
                    double rel_tol) {
    double f_lo = shoot(e_lo, even, g);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (e_lo + e_hi);
        if (e_hi - e_lo < rel_tol * std::max(1.0, std::abs(mid))) return mid;
        const double f_mid = shoot(mid, even, g);
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            e_lo = mid;
            f_lo = f_mid;
        } else {
            e_hi = mid;
        }
    }
    return 0.5 * (e_lo + e_hi);
}

std::vector<double> scan_levels(bool even, const Grid& g,
                                const SpectrumOptions& o, double e_min,
                                double e_max, int want) {
    std::vector<double> found;
    double e_prev = e_min;
    double f_prev = shoot(e_prev, even, g);
    for (double e = e_min + o.scan_step; e <= e_max && static_cast<int>(found.size()) < want;
         e += o.scan_step) {
        const double f_cur = shoot(e, even, g);
        if ((f_prev < 0.0) != (f_cur < 0.0))
            found.push_back(bisect_level(e_prev, e, even, g, o.bisect_rel_tol));
        e_prev = e;
        f_prev = f_cur;
    }
    return found;
}

std::vector<double> levels_on_grid(double alpha, double beta,
                                   const SpectrumOptions& o, const Grid& g) {
    const double v_min = *std::min_element(g.pot.begin(), g.pot.end());
    const double v0 = g.pot[0];
    const double e_min = v_min;
    const double e_max = std::max(v0, v_min) + o.scan_extent;

    std::vector<double> levels;
    for (bool even : {true, false}) {
        auto part = scan_levels(even, g, o, e_min, e_max, o.n_levels);
        levels.insert(levels.end(), part.begin(), part.end());
    }
    std::sort(levels.begin(), levels.end());
    if (static_cast<int>(levels.size()) < o.n_levels)
        throw NoConvergence("numerov: bracketing found fewer levels than requested");
    levels.resize(o.n_levels);
    (void)alpha;
    (void)beta;
    return levels;
}

} // namespace

std::vector<double> numerov_levels(double alpha, double beta,
                                   const SpectrumOptions& opts) {
    if (!(opts.grid_step > 0.0))
        throw RangeError("numerov: grid_step must be positive");
    if (!(opts.theta_max >= 2.0 * kPi))
        throw RangeError("numerov: theta_max must be at least 2*pi");
    const Grid g = make_grid(alpha, beta, opts.grid_step, opts.theta_max);
    return levels_on_grid(alpha, beta, opts, g);
}

RfSquidSpectrum numerov_spectrum(const RfSquidParams& params,
                                 const SpectrumOptions& opts) {
    const auto en = RfSquidEnergies::from(params);
    RfSquidSpectrum s;
    s.levels = numerov_levels(en.alpha, params.beta, opts);
    s.delta = (s.levels[1] - s.levels[0]) * en.E_C;

    if (opts.check_grid) {
        SpectrumOptions half = opts;
        half.grid_step = opts.grid_step / 2.0;
        half.check_grid = false;
        half.n_levels = 2;
        const auto fine = numerov_levels(en.alpha, params.beta, half);
        const double delta_fine = (fine[1] - fine[0]) * en.E_C;
        if (std::abs(s.delta - delta_fine) > 0.01 * std::abs(delta_fine))
            throw GridTooCoarse("numerov: halving grid_step shifts delta by more than 1%");
    }

    if (params.beta > 1.0) {
        s.delta_phi = solve_delta_phi(params);
        s.barrier = barrier_height(params);
        s.E_err = params.phi_err != 0.0 ? bias_error_energy(params) : 0.0;
    }
    return s;
}

double bias_error_energy_quantum(const RfSquidParams& params,
                                 const SpectrumOptions& opts) {
    if (std::abs(params.phi_err) >= 0.01 * phi0)
        throw PerturbationInvalid("bias_error_energy_quantum: |phi_err| must be < 0.01 phi0");
    const auto en = RfSquidEnergies::from(params);
    SpectrumOptions o = opts;
    o.n_levels = 2;
    o.check_grid = false;
    const Grid g = make_grid(en.alpha, params.beta, o.grid_step, o.theta_max);
    const auto levels = levels_on_grid(en.alpha, params.beta, o, g);

    std::vector<double> psi_g, psi_e;
    shoot(levels[0], /*even=*/true, g, &psi_g);
    shoot(levels[1], /*even=*/false, g, &psi_e);

    // trapezoid norms and the <g|sin(theta)|e> matrix element on [0, theta_max],
    // doubled for the full line (integrands are even by parity)
    auto trapz = [&](auto f) {
        double acc = 0.5 * (f(0) + f(g.n));
        for (int i = 1; i < g.n; ++i) acc += f(i);
        return acc * g.step;
    };
    const double norm_g = 2.0 * trapz([&](int i) { return psi_g[i] * psi_g[i]; });
    const double norm_e = 2.0 * trapz([&](int i) { return psi_e[i] * psi_e[i]; });
    const double overlap =
        2.0 * trapz([&](int i) { return psi_g[i] * std::sin(i * g.step) * psi_e[i]; });
    const double matrix_element = overlap / std::sqrt(norm_g * norm_e);

    return 2.0 * params.critical_current() * params.phi_err * std::abs(matrix_element);
}

TwoLevelModel two_level_model(double delta, double e_err) {
    if (!(delta > 0.0)) throw RangeError("two_level_model: delta must be positive");
    TwoLevelModel m;
    const double root = std::sqrt(delta * delta + e_err * e_err);
    m.levels = {-root / 2.0, root / 2.0};

    auto normalized = [](double a, double b) {
        const double n = std::sqrt(a * a + b * b);
        return std::array<double, 2>{a / n, b / n};
    };
    // eigenvectors (delta, -/+ root - e_err) for levels +/- root/2
    m.ground_state = normalized(delta, root - e_err);
    m.excited_state = normalized(delta, -root - e_err);
    m.error_probability = (e_err / delta) * (e_err / delta);
    return m;
}

} // namespace fluxq
