#ifndef FLUXQ_NOISE_HPP
#define FLUXQ_NOISE_HPP

#include <functional>
#include <string>
#include <vector>

#include "fluxq/errors.hpp"
#include "fluxq/units.hpp"

// Flux-noise estimates feeding the bias-feasibility verdict: 1/f coupler
// noise, an integrated magnetometer spectrum, thermal inductor noise, and
// literature constant bounds.  The variance convention is
//   var = int S_n domega / pi = (2/pi) int S_n(f) df
// throughout, matching the quoted closed forms.

namespace fluxq {

enum class NoiseKind { one_over_f, magnetometer_spectrum, thermal_inductor, constant_bound };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::constant_bound;
    std::string label;

    // one_over_f
    double phi_n = 0.0;          // amplitude, phi0 units
    bool exact_factors = false;  // keep the (2/pi) ln(f_H/f_L) factor

    // magnetometer_spectrum: sqrt(S) = coeff * (1 + (f1/f)^e1 + (f2/f))
    double coeff = 0.0;  // T/sqrt(Hz)
    double f_corner1 = 0.0, exp1 = 0.0, f_corner2 = 0.0;
    double pickup_area = 0.0;  // m^2

    // thermal_inductor
    double temperature = 0.0;  // K
    double L_EM = 0.0;         // H

    // constant_bound
    double bound = 0.0;  // phi0 units

    // integration band (one_over_f with exact factors, magnetometer)
    double f_L = 0.1, f_H = 10e9;  // Hz

    // magnetic-coupling attenuation applied to the evaluated rms
    double attenuation = 1.0;
};

struct NoiseBudget {
    std::vector<std::pair<std::string, double>> contributions;  // (label, rms in phi0)
    double worst = 0.0;
    double required_phi_err = 0.0;  // phi0 units
    bool pass = false;
};

// rms in phi0 units; with exact_factors off the logarithmic factor is
// dropped and this is just phi_n.
double one_over_f_rms(double phi_n, double f_L, double f_H, bool exact_factors);

// (2/pi) int S(f) df by adaptive Simpson on a log-frequency axis.  The 2/pi
// factor is the variance normalization used throughout this module.
double integrate_spectrum(const std::function<double(double)>& S, double f_L,
                          double f_H, double rel_tol = 1e-6);

// Field rms in tesla from the magnetometer power density over [f_L, f_H].
double magnetometer_field_rms(double coeff, double f_corner1, double exp1,
                              double f_corner2, double f_L, double f_H,
                              double rel_tol = 1e-6);

// Flux rms in phi0 units for the given pickup area.
double magnetometer_rms(double coeff, double f_corner1, double exp1,
                        double f_corner2, double f_L, double f_H, double area,
                        double rel_tol = 1e-6);

// sqrt(k_B T L_EM)/phi0 from phi_n^2/2L_EM = k_B T / 2.
double thermal_inductor_rms(double temperature, double L_EM);

double evaluate_noise_spec(const NoiseSpec& spec);

// Evaluates all specs, appends the macroscopic-resonant-tunneling literature
// band (1e-4 .. 1e-3 phi0) as a constant entry, and compares the worst
// contribution against the required phi_err bound.
NoiseBudget assemble_budget(const std::vector<NoiseSpec>& specs,
                            double required_phi_err);

namespace noise_literature {
inline constexpr double mrt_band_low = 1e-4;   // phi0 units
inline constexpr double mrt_band_high = 1e-3;  // phi0 units
} // namespace noise_literature

} // namespace fluxq

#endif
