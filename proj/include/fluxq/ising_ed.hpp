#ifndef FLUXQ_ISING_ED_HPP
#define FLUXQ_ISING_ED_HPP

#include <Eigen/Dense>
#include <vector>

#include "fluxq/ising_rg.hpp"

// Exact diagonalization of small open chains of
//   H = -J sum sz_i sz_{i+1} - h sum sx_i - eps sum sz_i
// used as desk-scale ground truth and to validate the 2-spin block projector.
//
// Basis convention: bit i (least significant first) of the basis index encodes
// spin i+1; bit value 0 means sz = +1.

namespace fluxq {

struct SpinChainSpec {
    int n_spins = 0;
    IsingParams params;

    void validate() const {
        if (n_spins < 2) throw RangeError("ed: need at least 2 spins");
        if (n_spins > 14) throw TooLarge("ed: n_spins > 14 exceeds the dense-solver budget");
        if (!(params.J > 0.0)) throw RangeError("ed: J must be positive");
        if (!(params.h >= 0.0)) throw RangeError("ed: h must be non-negative");
    }
};

struct SpectrumResult {
    Eigen::VectorXd energies;      // ascending, J
    Eigen::VectorXd ground_state;  // sz product basis amplitudes
    double gap = 0.0;              // E1 - E0, J
};

struct ChainObservables {
    double gap = 0.0;
    double polarization = 0.0;          // <sz> per site, or sqrt(C) proxy when eps = 0
    double mean_sz = 0.0;               // raw <sz> per site
    std::vector<double> correlators;    // C(1) .. C(n_spins-1), site-averaged
};

struct BlockProjectionReport {
    double max_eigen_discrepancy = 0.0;  // after removing the per-block constant
    double alpha_overlap = 0.0;          // <g_-1|g_1>
    double alpha_expected = 0.0;         // h/sqrt(h^2+J^2)
    std::array<double, 2> beta_pm = {0.0, 0.0};           // <g_s|sz|g_s>, s = +1, -1
    std::array<double, 2> beta_pm_expected = {0.0, 0.0};  // Appendix closed form
};

inline int sz_of(unsigned basis_state, int spin_index) {
    return 1 - 2 * static_cast<int>((basis_state >> spin_index) & 1u);
}

Eigen::MatrixXd build_hamiltonian(const SpinChainSpec& spec);

SpectrumResult diagonalize(const SpinChainSpec& spec);

ChainObservables ground_state_observables(const SpinChainSpec& spec);

// Eigenvalues +/- sqrt(h^2 + (sJ + eps)^2) of the 2-spin intra-block
// Hamiltonian -h sx_1 - eps sz_1 - J sz_1 sz_2, ascending.
std::array<double, 4> intra_block_eigenvalues(const IsingParams& p);

// First-order-in-eps slave ground state |g_s> in the (|+1>, |-1>) basis.
Eigen::Vector2d slave_ground_state(const IsingParams& p, int s);

// Builds the explicit 4-spin projector, computes P^dag H P and compares its
// spectrum against the block-renormalized 2-spin Hamiltonian (with the
// open-chain edge correction on the last renormalized spin).
BlockProjectionReport validate_block_projection(const IsingParams& p);

} // namespace fluxq

#endif
