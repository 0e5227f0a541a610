#ifndef FLUXQ_RF_SQUID_HPP
#define FLUXQ_RF_SQUID_HPP

#include <array>
#include <utility>
#include <vector>

#include "fluxq/errors.hpp"
#include "fluxq/units.hpp"

// Single rf-SQUID analysis: double-well flux potential, minima separation,
// barrier, parity-resolved Numerov eigensolver for the tunnel splitting, and
// the bias-error perturbation of the well asymmetry.

namespace fluxq {

struct RfSquidParams {
    double L = 0.0;        // loop inductance, H
    double C = 0.0;        // effective capacitance, F
    double beta = 0.0;     // screening parameter 2*pi*L*i_c/phi0
    double phi_err = 0.0;  // bias flux error, Wb

    double critical_current() const;  // A
    void validate() const;            // throws RangeError
};

struct RfSquidEnergies {
    double E_J = 0.0;    // Josephson energy, J
    double E_C = 0.0;    // charging energy (2e)^2/2C, J
    double E_L = 0.0;    // (phi0/2pi)^2/2L, J
    double alpha = 0.0;  // E_L/E_C

    static RfSquidEnergies from(const RfSquidParams& p);
};

struct SpectrumOptions {
    double grid_step = std::numbers::pi / 100.0;  // dimensionless theta step
    double theta_max = 2.0 * std::numbers::pi;
    int n_levels = 2;
    double scan_step = 0.05;       // coarse eigenvalue scan step (units of E_C)
    double scan_extent = 20.0;     // scan window above max(V(0), Vmin)
    double bisect_rel_tol = 1e-10;
    bool check_grid = true;        // halve the step and require <1% shift in delta
};

struct RfSquidSpectrum {
    std::vector<double> levels;  // dimensionless, units of E_C, ascending
    double delta = 0.0;          // (E1-E0)*E_C, J
    double delta_phi = 0.0;      // minima separation, Wb (0 when beta <= 1)
    double barrier = 0.0;        // U(0)-U(delta_phi/2), J (0 when beta <= 1)
    double E_err = 0.0;          // well asymmetry from phi_err, J
};

struct TwoLevelModel {
    std::pair<double, double> levels;      // (ground, excited), J
    std::array<double, 2> ground_state;    // normalized
    std::array<double, 2> excited_state;   // normalized
    double error_probability = 0.0;        // (E_err/delta)^2
};

// U(phi) = phi^2/2L + E_J cos[2pi(phi + phi_err)/phi0]
double potential(double phi, const RfSquidParams& params);

// Dimensionless potential of h_hat = -d^2/dtheta^2 + alpha theta^2
//                                    + 2 alpha beta cos(theta)
double dimensionless_potential(double theta, double alpha, double beta);

// Positive root of x = beta sin(x), x = pi*delta_phi/phi0, in (0, pi).
// Throws NoDoubleWell for beta <= 1.
double solve_delta_phi(const RfSquidParams& params);

// Relative sensitivity beta*(d delta_phi/d beta)/delta_phi = 1/(1-beta cos x).
double delta_phi_sensitivity(const RfSquidParams& params);

// Exact U(0) - U(delta_phi/2) with phi_err = 0.
double barrier_height(const RfSquidParams& params);

// Large-beta approximation 2*E_J*(1 - pi^2/(4 beta)).
double barrier_height_asymptotic(const RfSquidParams& params);

// Semi-classical E_err = (delta_phi/L)*phi_err.  Throws PerturbationInvalid
// when |phi_err| >= 0.01*phi0.
double bias_error_energy(const RfSquidParams& params);

// Quantum cross-check of E_err from the sin(theta) matrix element between the
// two lowest Numerov wavefunctions (Eq. with localized well states).
double bias_error_energy_quantum(const RfSquidParams& params,
                                 const SpectrumOptions& opts = {});

// Dimensionless low-lying eigenvalues of h_hat by parity-resolved shooting.
std::vector<double> numerov_levels(double alpha, double beta,
                                   const SpectrumOptions& opts = {});

RfSquidSpectrum numerov_spectrum(const RfSquidParams& params,
                                 const SpectrumOptions& opts = {});

TwoLevelModel two_level_model(double delta, double e_err);

} // namespace fluxq

#endif
