#ifndef FLUXQ_UNITS_HPP
#define FLUXQ_UNITS_HPP

#include <cmath>
#include <numbers>

// Physical constants (CODATA-2018 exact definitions where available) and the
// unit conversions used throughout the toolkit.  All internal computation is
// in SI; conversion happens only at I/O boundaries.

namespace fluxq::constants {

inline constexpr double e_charge = 1.602176634e-19;    // C, exact
inline constexpr double h_planck = 6.62607015e-34;     // J s, exact
inline constexpr double k_B      = 1.380649e-23;       // J/K, exact
inline constexpr double hbar     = h_planck / (2.0 * std::numbers::pi);
inline constexpr double phi0     = h_planck / (2.0 * e_charge);  // Wb
inline constexpr double mu0      = 1.25663706212e-6;   // H/m
inline constexpr double eps0     = 8.8541878128e-12;   // F/m

} // namespace fluxq::constants

namespace fluxq::units {

inline double energy_J_to_ueV(double e_joule) {
    return e_joule / constants::e_charge * 1e6;
}

inline double energy_ueV_to_J(double e_uev) {
    return e_uev * constants::e_charge * 1e-6;
}

inline double energy_J_to_meV(double e_joule) {
    return e_joule / constants::e_charge * 1e3;
}

inline double flux_Wb_to_phi0(double flux_wb) {
    return flux_wb / constants::phi0;
}

inline double flux_phi0_to_Wb(double flux_phi0) {
    return flux_phi0 * constants::phi0;
}

inline double temperature_to_thermal_energy(double t_kelvin) {
    return constants::k_B * t_kelvin;
}

} // namespace fluxq::units

#endif
