#ifndef FLUXQ_EEEM_HPP
#define FLUXQ_EEEM_HPP

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "fluxq/errors.hpp"

// Qubit-electron amplitude evolution for the entanglement-enhanced
// interrogation protocol: imperfect-flux interaction, specimen phase,
// symmetric/antisymmetric electron measurement, leftover qubit state.
// The mean phase shift is symmetrized (pi/2 convention); exact
// trigonometric amplitudes are used internally, with the first-order
// forms exposed for comparison.

namespace fluxq {

using cdouble = std::complex<double>;

struct EeemConfig {
    double P = 1.0;  // qubit polarization, 0 < P <= 1
    double s = 0.0;  // specimen phase parameter, radians

    double zeta() const { return (M_PI / 4.0) * (1.0 - P); }
    void validate() const {
        if (P <= 0.0 || P > 1.0) throw RangeError("EeemConfig: need 0 < P <= 1");
    }
};

// Product-basis amplitudes, index = 2*electron + qubit.
struct JointState {
    std::array<cdouble, 4> amp{};

    double norm() const;
};

enum class ElectronBasis { symmetric, antisymmetric };

struct MeasurementResult {
    double probability = 0.0;
    std::array<cdouble, 2> qubit;  // normalized post-measurement state
};

// Entangles electron |0>_e with qubit (|0>+|1>)/sqrt2; zeta away from zero
// leaks amplitude into the wrong electron path.
JointState interact(const EeemConfig& config);

// Same interaction on an arbitrary normalized qubit state, for round folding.
JointState interact(const std::array<cdouble, 2>& qubit, double zeta);

// First order in zeta, for exact-vs-linearized comparisons.
JointState first_order_state(const EeemConfig& config);

// e^{+is} on the electron-0 branch, e^{-is} on the electron-1 branch.
JointState specimen_phase(const JointState& state, double s);

MeasurementResult measure_electron(const JointState& state, ElectronBasis basis);

struct SmearedResult {
    cdouble zeta0{};  // complex corrections e^{is+zeta0}, e^{-is+zeta1}
    cdouble zeta1{};
    double excitation_probability = 0.0;
};

// Each dressed qubit basis state is a unit-norm superposition of components
// with their own coupling error zeta_i; one symmetric-outcome round projects
// back onto the dressed states and leaves the residual weight excited.
SmearedResult smeared_flux_model(
    const EeemConfig& config,
    const std::vector<std::pair<cdouble, double>>& branch0,
    const std::vector<std::pair<cdouble, double>>& branch1);

struct RoundOutcome {
    ElectronBasis outcome;
    double probability;
};

struct FoldedRounds {
    double joint_probability = 1.0;
    std::array<cdouble, 2> qubit;
    std::vector<RoundOutcome> rounds;
};

// Repeats interact -> specimen_phase -> measure, feeding the post-measurement
// qubit state into the next interaction.
FoldedRounds run_rounds(const EeemConfig& config, int n_rounds,
                        ElectronBasis outcome = ElectronBasis::symmetric);

} // namespace fluxq

#endif
