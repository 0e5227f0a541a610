#include "fluxq/noise.hpp"

#include <cmath>
#include <functional>

namespace fluxq {

double one_over_f_rms(double phi_n, double f_L, double f_H, bool exact_factors) {
    if (phi_n < 0.0 || f_L <= 0.0 || f_H <= f_L)
        throw RangeError("one_over_f_rms: need phi_n >= 0 and 0 < f_L < f_H");
    if (!exact_factors) return phi_n;
    // var = (2/pi) int phi_n^2 / f df = (2 phi_n^2 / pi) ln(f_H/f_L)
    return phi_n * std::sqrt(2.0 * std::log(f_H / f_L) / M_PI);
}

namespace {

// Adaptive Simpson on u = ln f, so the 1/f corners are resolved without
// millions of panels.
double simpson(const std::function<double(double)>& g, double a, double m,
               double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& g, double a, double m,
             double b, double fa, double fm, double fb, double whole,
             double tol, int depth) {
    if (depth > 60) throw QuadratureFailure("adaptive Simpson recursion too deep");
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = g(lm), frm = g(rm);
    double left = simpson(g, a, lm, m, fa, flm, fm);
    double right = simpson(g, m, rm, b, fm, frm, fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adapt(g, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(g, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double integrate_log(const std::function<double(double)>& spectral_density,
                     double f_L, double f_H, double rel_tol) {
    // int S df = int S(e^u) e^u du
    auto g = [&](double u) {
        double f = std::exp(u);
        return spectral_density(f) * f;
    };
    double a = std::log(f_L), b = std::log(f_H);
    double m = 0.5 * (a + b);
    double fa = g(a), fm = g(m), fb = g(b);
    double whole = simpson(g, a, m, b, fa, fm, fb);
    double scale = std::abs(whole);
    if (scale == 0.0) return 0.0;
    double result = adapt(g, a, m, b, fa, fm, fb, whole, rel_tol * scale, 0);
    if (!std::isfinite(result)) throw QuadratureFailure("non-finite integral");
    return result;
}

} // namespace

double integrate_spectrum(const std::function<double(double)>& S, double f_L,
                          double f_H, double rel_tol) {
    if (f_L <= 0.0 || f_H <= f_L)
        throw RangeError("integrate_spectrum: need 0 < f_L < f_H");
    return (2.0 / M_PI) * integrate_log(S, f_L, f_H, rel_tol);
}

double magnetometer_field_rms(double coeff, double f_corner1, double exp1,
                              double f_corner2, double f_L, double f_H,
                              double rel_tol) {
    if (coeff < 0.0 || f_L <= 0.0 || f_H <= f_L)
        throw RangeError("magnetometer_field_rms: need coeff >= 0 and 0 < f_L < f_H");
    auto S = [&](double f) {
        double t1 = f_corner1 > 0.0 ? std::pow(f_corner1 / f, exp1) : 0.0;
        double amp = coeff * (1.0 + t1 + f_corner2 / f);
        return amp * amp;
    };
    return std::sqrt(integrate_spectrum(S, f_L, f_H, rel_tol));
}

double magnetometer_rms(double coeff, double f_corner1, double exp1,
                        double f_corner2, double f_L, double f_H, double area,
                        double rel_tol) {
    if (area <= 0.0) throw RangeError("magnetometer_rms: need pickup area > 0");
    double field = magnetometer_field_rms(coeff, f_corner1, exp1, f_corner2,
                                          f_L, f_H, rel_tol);
    return field * area / constants::phi0;
}

double thermal_inductor_rms(double temperature, double L_EM) {
    if (temperature < 0.0 || L_EM <= 0.0)
        throw RangeError("thermal_inductor_rms: need T >= 0 and L_EM > 0");
    return std::sqrt(constants::k_B * temperature * L_EM) / constants::phi0;
}

double evaluate_noise_spec(const NoiseSpec& spec) {
    double rms = 0.0;
    switch (spec.kind) {
        case NoiseKind::one_over_f:
            rms = one_over_f_rms(spec.phi_n, spec.f_L, spec.f_H, spec.exact_factors);
            break;
        case NoiseKind::magnetometer_spectrum:
            rms = magnetometer_rms(spec.coeff, spec.f_corner1, spec.exp1,
                                   spec.f_corner2, spec.f_L, spec.f_H,
                                   spec.pickup_area);
            break;
        case NoiseKind::thermal_inductor:
            rms = thermal_inductor_rms(spec.temperature, spec.L_EM);
            break;
        case NoiseKind::constant_bound:
            if (spec.bound < 0.0) throw RangeError("constant_bound: need bound >= 0");
            rms = spec.bound;
            break;
    }
    if (spec.attenuation < 0.0 || spec.attenuation > 1.0)
        throw RangeError("noise attenuation must be in [0, 1]");
    return rms * spec.attenuation;
}

NoiseBudget assemble_budget(const std::vector<NoiseSpec>& specs,
                            double required_phi_err) {
    if (required_phi_err <= 0.0)
        throw RangeError("assemble_budget: need required_phi_err > 0");
    NoiseBudget budget;
    budget.required_phi_err = required_phi_err;
    for (const auto& spec : specs) {
        double rms = evaluate_noise_spec(spec);
        budget.contributions.emplace_back(
            spec.label.empty() ? std::string("entry") : spec.label, rms);
    }
    budget.contributions.emplace_back("mrt-literature-band",
                                      noise_literature::mrt_band_high);
    for (const auto& [label, rms] : budget.contributions)
        if (rms > budget.worst) budget.worst = rms;
    budget.pass = budget.worst <= required_phi_err;
    return budget;
}

} // namespace fluxq
