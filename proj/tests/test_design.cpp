#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fluxq/design.hpp"

using namespace fluxq;
using doctest::Approx;

namespace {
DesignReport reference_report(double C = 10e-15, double R_target = 0.57) {
    RfSquidParams dev{800e-12, C, std::sqrt(2.0) * M_PI / 4.0, 0.0};
    double delta = numerov_spectrum(dev).delta;
    double M = required_mutual_for_R(dev.L, 4, delta, R_target);
    return analyze(dev, 4, M, 1e-4 * constants::phi0, 10.0, {});
}
} // namespace

TEST_CASE("reference operating point") {
    DesignReport r = reference_report();
    CHECK(r.R == Approx(0.57).epsilon(1e-10));
    CHECK(r.rg_steps == 2);
    CHECK(r.power_of_two);

    // renormalized splitting and the reset-time bound
    CHECK(r.delta_renorm == Approx(1.6e-24).epsilon(0.03));
    CHECK(r.reset_time == Approx(0.40e-9).epsilon(0.03));

    // internal consistency with the closed-form two-step ratio
    CHECK(r.delta_renorm / (2.0 * r.ising.h) ==
          Approx(two_step_ratios(r.R).h_ratio).epsilon(1e-10));

    // bias-precision requirement sits in the quoted decade
    CHECK(r.phi_err_bound < 1e-4);
    CHECK(r.phi_err_bound > 1e-5);

    // geometry: 4 x 4 mm with the coax preset, well under the 0.1 m limit
    CHECK(r.geometry.length_per_squid == Approx(4e-3).epsilon(1e-10));
    CHECK(r.geometry.total_length == Approx(16e-3).epsilon(1e-10));
    CHECK(r.geometry.pass);
}

TEST_CASE("larger capacitance tightens the requirement") {
    DesignReport a = reference_report(10e-15);
    DesignReport b = reference_report(100e-15);
    CHECK(b.spectrum.delta < a.spectrum.delta);
    CHECK(b.phi_err_bound < a.phi_err_bound);
    // an order of magnitude more stringent, tracking the splitting ratio
    double tightening = a.phi_err_bound / b.phi_err_bound;
    CHECK(tightening > 8.0);
    CHECK(tightening < 12.0);
    CHECK(tightening == Approx(a.spectrum.delta / b.spectrum.delta).epsilon(1e-6));
}

TEST_CASE("paramagnetic operating point is rejected") {
    RfSquidParams dev{800e-12, 10e-15, std::sqrt(2.0) * M_PI / 4.0, 0.0};
    double delta = numerov_spectrum(dev).delta;
    double M = required_mutual_for_R(dev.L, 4, delta, 1.3);
    CHECK_THROWS_AS(analyze(dev, 4, M, 0.0, 10.0, {}), InfeasibleDesign);
}

TEST_CASE("geometry check presets") {
    auto g = geometry_check(800e-12, 4, presets::l_per_coax, 1e-5, 1e-4);
    CHECK(g.length_per_squid == Approx(4e-3).epsilon(1e-12));
    CHECK(g.total_length == Approx(16e-3).epsilon(1e-12));
    CHECK(g.coherence_length == Approx(0.1).epsilon(1e-12));
    CHECK(g.pass);

    auto g5 = geometry_check(5e-9, 1, presets::l_per_coax, 1e-5, 1e-4);
    CHECK(g5.length_per_squid == Approx(25e-3).epsilon(1e-12));

    auto go = geometry_check(800e-12, 4, presets::l_per_open_loop, 1e-5, 1e-4);
    CHECK(go.length_per_squid == Approx(800e-12 / 1.2e-6).epsilon(1e-12));
    CHECK(go.pass);

    auto bad = geometry_check(5e-9, 50, presets::l_per_coax, 1e-5, 1e-4);
    CHECK_FALSE(bad.pass);
}

TEST_CASE("single large SQUID comparison point") {
    // beta = 10, L = 5 nH, splitting below 30 peV makes the requirement
    // about 1e-9 phi0 or tighter
    RfSquidParams dev{5e-9, 10e-15, 10.0, 1e-9 * constants::phi0};
    double delta_bound = units::energy_ueV_to_J(30e-6);  // 30 peV
    double e_err = bias_error_energy(dev);
    // separation saturates near one quantum, E_err ~ (phi0/L) phi_err
    CHECK(e_err == Approx(constants::phi0 * dev.phi_err / dev.L).epsilon(0.12));
    // E_err at 1e-9 phi0 is already a sizable fraction of the splitting bound
    CHECK(e_err > 0.01 * delta_bound);
}

TEST_CASE("non-power-of-two squid count is flagged") {
    RfSquidParams dev{800e-12, 10e-15, std::sqrt(2.0) * M_PI / 4.0, 0.0};
    double delta = numerov_spectrum(dev).delta;
    double M = required_mutual_for_R(dev.L, 6, delta, 0.57);
    DesignReport r = analyze(dev, 6, M, 0.0, 10.0, {});
    CHECK_FALSE(r.power_of_two);
    CHECK(r.rg_steps == 3);
}
