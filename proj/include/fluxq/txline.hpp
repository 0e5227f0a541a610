#ifndef FLUXQ_TXLINE_HPP
#define FLUXQ_TXLINE_HPP

#include <cmath>

#include "fluxq/errors.hpp"
#include "fluxq/units.hpp"

// Lumped-parameter results of the transmission-line treatment of a long
// rectangular rf-SQUID: effective capacitance C_J + c*a/12, photon gaps, and
// the parallel-rod capacitance-per-length scenarios.

namespace fluxq {

struct TxLineSpec {
    double a = 0.0;      // long-side length, m
    double l_per = 0.0;  // inductance per unit length, H/m
    double c_per = 0.0;  // capacitance per unit length, F/m
    double C_J = 0.0;    // junction capacitance, F

    void validate() const {
        if (!(a > 0.0) || !(l_per > 0.0) || !(c_per > 0.0) || !(C_J >= 0.0))
            throw RangeError("txline: spec values must be positive");
    }
};

inline double effective_capacitance(const TxLineSpec& spec) {
    spec.validate();
    return spec.C_J + spec.c_per * spec.a / 12.0;
}

inline double companion_inductance(const TxLineSpec& spec) {
    spec.validate();
    return spec.l_per * spec.a;
}

// Treatment of the ln(d/a) factor in the two-rod formula c = pi*eps/ln(d/a).
enum class RodLogMode {
    exact,     // honest logarithm
    unity,     // "ignoring the logarithmic factor": ln -> 1 (silicon figure)
    pi_value,  // ln(d/a) engineered to ~pi, i.e. c = eps_eff (etched figure)
};

inline double parallel_rod_capacitance(double eps_eff, double d, double rod_radius,
                                       RodLogMode mode = RodLogMode::exact) {
    if (!(eps_eff > 0.0) || !(d > 0.0) || !(rod_radius > 0.0))
        throw RangeError("parallel_rod_capacitance: inputs must be positive");
    if (d / rod_radius <= 3.0)
        throw GeometryInvalid("parallel_rod_capacitance: need d/rod_radius > 3");
    switch (mode) {
        case RodLogMode::unity: return std::numbers::pi * eps_eff;
        case RodLogMode::pi_value: return eps_eff;
        case RodLogMode::exact: break;
    }
    return std::numbers::pi * eps_eff / std::log(d / rod_radius);
}

struct PhotonGaps {
    double psi_branch = 0.0;  // 2*pi*hbar/(a*sqrt(l c)), J
    double xi_branch = 0.0;   // pi*hbar/(a*sqrt(l c)), J
};

inline PhotonGaps photon_gap(const TxLineSpec& spec) {
    spec.validate();
    const double transit = spec.a * std::sqrt(spec.l_per * spec.c_per);
    PhotonGaps g;
    g.psi_branch = constants::h_planck / transit;
    g.xi_branch = g.psi_branch / 2.0;
    return g;
}

// Named per-length presets quoted in the design discussion.
namespace presets {
// capacitance per unit length: c/12 = 14.7 fF/mm on silicon, 0.74 fF/mm etched
// (1 fF/mm = 1e-12 F/m)
inline constexpr double c_per_silicon = 12.0 * 14.7e-12;  // F/m
inline constexpr double c_per_etched  = 12.0 * 0.74e-12;  // F/m
// inductance per unit length: coax mu0/2pi ~ 0.2 nH/mm, open loop 1.2 nH/mm
inline constexpr double l_per_coax = 0.2e-9 / 1e-3;       // H/m
inline constexpr double l_per_open_loop = 1.2e-9 / 1e-3;  // H/m
} // namespace presets

} // namespace fluxq

#endif
