#ifndef FLUXQ_DESIGN_HPP
#define FLUXQ_DESIGN_HPP

#include <string>
#include <vector>

#include "fluxq/coupling.hpp"
#include "fluxq/ising_rg.hpp"
#include "fluxq/noise.hpp"
#include "fluxq/rf_squid.hpp"
#include "fluxq/txline.hpp"

// End-to-end feasibility: device parameters -> spectrum -> Ising mapping ->
// renormalization -> bias-precision requirement, reset timing and sizing.

namespace fluxq {

struct GeometryReport {
    double length_per_squid = 0.0;   // m
    double total_length = 0.0;       // m
    double coherence_length = 0.0;   // l_C / theta_d, m
    bool pass = false;
};

struct DesignReport {
    // echoed inputs
    RfSquidParams device;
    int n_squids = 0;
    double mutual = 0.0;             // H
    double phi_err = 0.0;            // Wb
    double margin = 10.0;

    // per-SQUID spectrum
    RfSquidSpectrum spectrum;        // energies in joules

    // Ising mapping and flow
    IsingParams ising;
    double R = 0.0;
    int rg_steps = 0;
    double h_renorm = 0.0;           // J, after rg_steps
    double eps_renorm = 0.0;         // J
    double delta_renorm = 0.0;       // 2 h_renorm, J

    // requirements
    double phi_err_bound = 0.0;      // phi0 units, from eps'' * margin < h''
    double reset_time = 0.0;         // s, h_planck / delta_renorm
    bool power_of_two = true;        // caveat flag for N not a power of two

    GeometryReport geometry;
    NoiseBudget noise;
};

// Composite analysis. margin scales the eps'' < h'' requirement; the noise
// list may be empty (budget then carries only the literature band).
DesignReport analyze(const RfSquidParams& device, int n_squids, double mutual,
                     double phi_err, double margin,
                     const std::vector<NoiseSpec>& noise,
                     const SpectrumOptions& opts = {});

GeometryReport geometry_check(double L, int n_squids, double l_per_length,
                              double l_C, double theta_d);

} // namespace fluxq

#endif
