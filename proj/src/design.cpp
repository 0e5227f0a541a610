#include "fluxq/design.hpp"

#include <cmath>

namespace fluxq {

GeometryReport geometry_check(double L, int n_squids, double l_per_length,
                              double l_C, double theta_d) {
    if (!(L > 0.0) || n_squids < 1 || !(l_per_length > 0.0) || !(l_C > 0.0) ||
        !(theta_d > 0.0))
        throw RangeError("geometry_check: all inputs must be positive");
    GeometryReport g;
    g.length_per_squid = L / l_per_length;
    g.total_length = n_squids * g.length_per_squid;
    g.coherence_length = l_C / theta_d;
    g.pass = g.total_length < g.coherence_length;
    return g;
}

DesignReport analyze(const RfSquidParams& device, int n_squids, double mutual,
                     double phi_err, double margin,
                     const std::vector<NoiseSpec>& noise,
                     const SpectrumOptions& opts) {
    if (n_squids < 2) throw RangeError("analyze: need at least 2 SQUIDs");
    if (!(margin > 0.0)) throw RangeError("analyze: need margin > 0");

    DesignReport rep;
    rep.device = device;
    rep.device.phi_err = phi_err;
    rep.n_squids = n_squids;
    rep.mutual = mutual;
    rep.phi_err = phi_err;
    rep.margin = margin;

    rep.spectrum = numerov_spectrum(rep.device, opts);
    rep.ising = map_to_ising(device.L, mutual, n_squids, rep.spectrum.delta,
                             rep.spectrum.E_err);
    rep.R = rep.ising.R();
    if (rep.R >= 1.0)
        throw InfeasibleDesign("analyze: operating point is paramagnetic (R >= 1)");

    rep.rg_steps = static_cast<int>(std::ceil(std::log2(double(n_squids))));
    rep.power_of_two = (n_squids & (n_squids - 1)) == 0;

    // The bias map is exactly linear in eps at fixed (h, J), so run the flow
    // at eps = 0 and accumulate the bias growth factor along the trajectory.
    // This is the first-order bound; it stays valid as long as the final
    // eps'' is small against h'', which is what phi_err_bound enforces.
    IsingParams p = rep.ising;
    p.eps = 0.0;
    double eps_factor = 1.0;
    for (int i = 0; i < rep.rg_steps; ++i) {
        double root = std::sqrt(p.h * p.h + p.J * p.J);
        eps_factor *= 1.0 + p.J / root * (1.0 + p.h * p.h / (root * root));
        p = rg_step(p);
    }
    rep.h_renorm = p.h;
    rep.eps_renorm = rep.ising.eps * eps_factor;
    rep.delta_renorm = 2.0 * p.h;

    // eps''(phi_err) * margin < h'': the bound in flux is linear in phi_err
    // through E_err = (delta_phi/L) phi_err.
    double eps_per_phi;
    if (rep.phi_err != 0.0 && rep.ising.eps != 0.0) {
        eps_per_phi = rep.eps_renorm / rep.phi_err;
    } else {
        // evaluate the slope at a reference bias instead
        double ref = 1e-5 * constants::phi0;
        RfSquidParams d2 = device;
        d2.phi_err = ref;
        eps_per_phi = eps_factor * 0.5 * bias_error_energy(d2) / ref;
    }
    rep.phi_err_bound = rep.h_renorm / (margin * eps_per_phi) / constants::phi0;

    rep.reset_time = constants::h_planck / rep.delta_renorm;

    rep.geometry = geometry_check(device.L, n_squids,
                                  presets::l_per_coax, 1e-5, 1e-4);
    rep.noise = assemble_budget(noise, rep.phi_err_bound);
    return rep;
}

} // namespace fluxq
