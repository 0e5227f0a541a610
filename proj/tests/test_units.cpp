#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fluxq/units.hpp"

using namespace fluxq;

TEST_CASE("defined constants") {
    CHECK(constants::phi0 == doctest::Approx(2.067833848e-15).epsilon(1e-9));
    CHECK(constants::hbar == doctest::Approx(1.054571817e-34).epsilon(1e-9));
    CHECK(constants::e_charge == 1.602176634e-19);
    CHECK(constants::k_B == 1.380649e-23);
}

TEST_CASE("energy conversions round trip") {
    double e = 67.0;  // ueV
    CHECK(units::energy_J_to_ueV(units::energy_ueV_to_J(e)) == doctest::Approx(e).epsilon(1e-14));
    CHECK(units::energy_J_to_meV(units::energy_ueV_to_J(1000.0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("flux conversions round trip") {
    double f = 0.25;
    CHECK(units::flux_Wb_to_phi0(units::flux_phi0_to_Wb(f)) == doctest::Approx(f).epsilon(1e-14));
    CHECK(units::flux_phi0_to_Wb(1.0) == constants::phi0);
}

TEST_CASE("thermal energy") {
    CHECK(units::temperature_to_thermal_energy(1.0) == constants::k_B);
    CHECK(units::temperature_to_thermal_energy(0.1) == doctest::Approx(1.380649e-24).epsilon(1e-14));
}
