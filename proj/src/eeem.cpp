#include "fluxq/eeem.hpp"

#include <cmath>

namespace fluxq {

namespace {
constexpr cdouble I{0.0, 1.0};
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

double JointState::norm() const {
    double n2 = 0.0;
    for (const auto& a : amp) n2 += std::norm(a);
    return std::sqrt(n2);
}

JointState interact(const std::array<cdouble, 2>& qubit, double zeta) {
    // |0>_e|q> -> (cos z |q>_e' components): qubit 0 keeps the electron on
    // path 0 up to a sin z leak, qubit 1 sends it to path 1.
    double c = std::cos(zeta), s = std::sin(zeta);
    JointState out;
    out.amp[0] = c * qubit[0];       // e0 q0
    out.amp[2] = -I * s * qubit[0];  // e1 q0
    out.amp[3] = c * qubit[1];       // e1 q1
    out.amp[1] = I * s * qubit[1];   // e0 q1
    return out;
}

JointState interact(const EeemConfig& config) {
    config.validate();
    return interact({inv_sqrt2, inv_sqrt2}, config.zeta());
}

JointState first_order_state(const EeemConfig& config) {
    config.validate();
    double z = config.zeta();
    JointState out;
    out.amp[0] = inv_sqrt2;
    out.amp[3] = inv_sqrt2;
    out.amp[1] = I * z * inv_sqrt2;
    out.amp[2] = -I * z * inv_sqrt2;
    return out;
}

JointState specimen_phase(const JointState& state, double s) {
    JointState out = state;
    cdouble p = std::exp(I * s), m = std::exp(-I * s);
    out.amp[0] *= p;
    out.amp[1] *= p;
    out.amp[2] *= m;
    out.amp[3] *= m;
    return out;
}

MeasurementResult measure_electron(const JointState& state, ElectronBasis basis) {
    double sign = (basis == ElectronBasis::symmetric) ? 1.0 : -1.0;
    MeasurementResult r;
    // project onto (|0>_e + sign |1>_e)/sqrt2
    r.qubit[0] = inv_sqrt2 * (state.amp[0] + sign * state.amp[2]);
    r.qubit[1] = inv_sqrt2 * (state.amp[1] + sign * state.amp[3]);
    r.probability = std::norm(r.qubit[0]) + std::norm(r.qubit[1]);
    if (r.probability > 0.0) {
        double n = std::sqrt(r.probability);
        r.qubit[0] /= n;
        r.qubit[1] /= n;
    }
    return r;
}

SmearedResult smeared_flux_model(
    const EeemConfig& config,
    const std::vector<std::pair<cdouble, double>>& branch0,
    const std::vector<std::pair<cdouble, double>>& branch1) {
    config.validate();
    auto check_norm = [](const std::vector<std::pair<cdouble, double>>& br) {
        double n2 = 0.0;
        for (const auto& [c, z] : br) n2 += std::norm(c);
        if (std::abs(n2 - 1.0) > 1e-9)
            throw NotNormalized("smeared_flux_model: branch amplitudes must be unit norm");
    };
    check_norm(branch0);
    check_norm(branch1);

    double s = config.s;
    cdouble eis = std::exp(I * s), emis = std::exp(-I * s);

    // Symmetric-outcome round, componentwise: |0_i> picks up
    // (e^{is} - i z_i e^{-is}), |1_i> picks up (e^{-is} + i z_i e^{is}).
    cdouble A0 = 0.0, A1 = 0.0;
    double N0 = 0.0, N1 = 0.0;
    for (const auto& [c, z] : branch0) {
        cdouble f = std::cos(z) * eis - I * std::sin(z) * emis;
        A0 += std::norm(c) * f;
        N0 += std::norm(c) * std::norm(f);
    }
    for (const auto& [c, z] : branch1) {
        cdouble f = std::cos(z) * emis + I * std::sin(z) * eis;
        A1 += std::norm(c) * f;
        N1 += std::norm(c) * std::norm(f);
    }

    SmearedResult r;
    r.zeta0 = std::log(A0 * emis);
    r.zeta1 = std::log(A1 * eis);
    r.excitation_probability = 1.0 - (std::norm(A0) + std::norm(A1)) / (N0 + N1);
    if (r.excitation_probability < 0.0 && r.excitation_probability > -1e-14)
        r.excitation_probability = 0.0;
    return r;
}

FoldedRounds run_rounds(const EeemConfig& config, int n_rounds,
                        ElectronBasis outcome) {
    config.validate();
    if (n_rounds < 1) throw RangeError("run_rounds: need n_rounds >= 1");
    FoldedRounds fr;
    fr.qubit = {inv_sqrt2, inv_sqrt2};
    double z = config.zeta();
    for (int i = 0; i < n_rounds; ++i) {
        JointState st = specimen_phase(interact(fr.qubit, z), config.s);
        MeasurementResult m = measure_electron(st, outcome);
        fr.joint_probability *= m.probability;
        fr.qubit = m.qubit;
        fr.rounds.push_back({outcome, m.probability});
    }
    return fr;
}

} // namespace fluxq
