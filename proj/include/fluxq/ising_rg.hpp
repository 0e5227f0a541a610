#ifndef FLUXQ_ISING_RG_HPP
#define FLUXQ_ISING_RG_HPP

#include <cmath>
#include <vector>

#include "fluxq/errors.hpp"

// Block renormalization (2-spin blocks) of the transverse-field Ising chain
// with a small longitudinal field, plus the closed-form two-step ratios and
// the infinite-chain correlator / polarization relations.

namespace fluxq {

struct IsingParams {
    double J = 0.0;    // ferromagnetic coupling, J (energy)
    double h = 0.0;    // transverse field, J
    double eps = 0.0;  // longitudinal field, J

    double R() const { return h / J; }
    double kappa() const { return R() - 1.0; }

    void validate(double eps_bound = 0.1) const {
        if (!(J > 0.0)) throw RangeError("ising: J must be positive");
        if (!(h >= 0.0)) throw RangeError("ising: h must be non-negative");
        if (!(eps >= 0.0)) throw RangeError("ising: eps must be non-negative");
        if (eps > 0.0) {
            // eps << h, J; the h part of the bound is moot in the classical h=0 limit
            if (eps >= eps_bound * J || (h > 0.0 && eps >= eps_bound * h))
                throw LongitudinalTooLarge("ising: eps must be below the validity bound");
        }
    }
};

struct RgTrajectory {
    std::vector<IsingParams> steps;  // entry k = parameters after k block steps
    long spins_per_site(int k) const { return 1L << k; }
};

inline IsingParams rg_step(const IsingParams& p, double eps_bound = 0.1) {
    p.validate(eps_bound);
    const double root = std::sqrt(p.h * p.h + p.J * p.J);
    IsingParams out;
    out.J = p.J * p.J / root;
    out.h = p.h * p.h / root;
    out.eps = p.eps * (1.0 + p.J / root * (1.0 + p.h * p.h / (root * root)));
    return out;
}

inline RgTrajectory rg_flow(const IsingParams& p, int n_steps,
                            double eps_bound = 0.1) {
    if (n_steps < 0) throw RangeError("rg_flow: n_steps must be non-negative");
    RgTrajectory t;
    t.steps.reserve(n_steps + 1);
    t.steps.push_back(p);
    for (int k = 0; k < n_steps; ++k)
        t.steps.push_back(rg_step(t.steps.back(), eps_bound));
    return t;
}

struct TwoStepRatios {
    double h_ratio = 0.0;    // h''/h
    double eps_ratio = 0.0;  // eps''/eps
};

inline TwoStepRatios two_step_ratios(double R) {
    if (!(R > 0.0)) throw RangeError("two_step_ratios: R must be positive");
    const double r2 = R * R;
    const double r4 = r2 * r2;
    TwoStepRatios out;
    out.h_ratio = R / std::sqrt(1.0 + r2) * r2 / std::sqrt(1.0 + r4);
    out.eps_ratio = (1.0 + (1.0 + 2.0 * r2) / std::pow(1.0 + r2, 1.5)) *
                    (1.0 + (1.0 + 2.0 * r4) / std::pow(1.0 + r4, 1.5));
    return out;
}

// Asymptotic two-point correlator of the infinite chain at distance n.
// For kappa < 0 the published value is n-independent and exceeds 1 once
// |kappa| > 1/2; it is returned as published (near-QCP asymptote).
inline double correlator_infinite_chain(double kappa, int n) {
    if (kappa == 0.0)
        throw AtCriticality("correlator: formula undefined at kappa = 0");
    if (n < 1) throw RangeError("correlator: n must be >= 1");
    if (kappa > 0.0) {
        const double nn = static_cast<double>(n);
        return std::pow(2.0 * std::numbers::pi * std::numbers::pi * nn * nn * kappa,
                        -0.25) *
               std::exp(-nn * kappa);
    }
    return std::pow(2.0 * std::abs(kappa), 0.25);
}

// Conservative design relation R = 1 - P^8 and its inverse.
inline double polarization_to_R(double P) {
    if (!(P > 0.0 && P <= 1.0)) throw RangeError("polarization_to_R: need 0 < P <= 1");
    return 1.0 - std::pow(P, 8.0);
}

inline double R_to_polarization(double R) {
    if (!(R >= 0.0 && R < 1.0)) throw RangeError("R_to_polarization: need 0 <= R < 1");
    return std::pow(1.0 - R, 0.125);
}

// Known infinite-chain polarization (2|kappa|)^{1/8}, ferromagnetic side.
inline double exact_polarization(double kappa) {
    if (!(kappa < 0.0)) throw RangeError("exact_polarization: need kappa < 0");
    return std::pow(2.0 * std::abs(kappa), 0.125);
}

} // namespace fluxq

#endif
