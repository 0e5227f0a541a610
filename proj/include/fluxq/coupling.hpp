#ifndef FLUXQ_COUPLING_HPP
#define FLUXQ_COUPLING_HPP

#include <Eigen/Dense>
#include <span>

#include "fluxq/ising_rg.hpp"
#include "fluxq/units.hpp"

// Magnetic energy of a chain of weakly coupled rf-SQUIDs (tridiagonal
// inductance matrix, first-order inverse) and the device -> Ising parameter
// mapping J = M phi0^2 / 2 N^2 L^2, h = delta/2, eps = E_err/2.

namespace fluxq {

struct CouplingModel {
    int n_squids = 0;
    double L = 0.0;  // self inductance, H
    double M = 0.0;  // nearest-neighbor effective mutual inductance, H

    double ratio() const { return M / L; }

    void validate() const {
        if (n_squids < 2) throw RangeError("coupling: need at least 2 SQUIDs");
        if (!(L > 0.0)) throw RangeError("coupling: L must be positive");
        if (!(M > 0.0)) throw RangeError("coupling: M must be positive");
        if (ratio() >= 0.2)
            throw RatioTooLarge("coupling: M/L must stay below 0.2 (first-order regime)");
    }
};

// First-order form [1/2(L+2M)] sum phi_k^2 + (M/2L^2) sum (phi_{k+1}-phi_k)^2.
double magnetic_energy(const CouplingModel& model, std::span<const double> fluxes);

// Exact form (1/2) phi^T (L A)^{-1} phi with A tridiagonal.
double magnetic_energy_exact(const CouplingModel& model, std::span<const double> fluxes);

Eigen::MatrixXd tridiagonal_matrix(const CouplingModel& model);

// B with diagonal 1 and off-diagonals -M/L; A*B = I + O((M/L)^2).
Eigen::MatrixXd tridiagonal_inverse_first_order(const CouplingModel& model);

IsingParams map_to_ising(double L, double M, int N, double delta, double e_err);

// M such that h/J = R_target given h = delta/2.
double required_mutual_for_R(double L, int N, double delta, double R_target);

} // namespace fluxq

#endif
