#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fluxq/coupling.hpp"

using namespace fluxq;
using doctest::Approx;

TEST_CASE("first-order magnetic energy") {
    CouplingModel m{4, 800e-12, 0.032 * 800e-12};
    std::vector<double> zero(4, 0.0);
    CHECK(magnetic_energy(m, zero) == 0.0);

    // decoupled limit
    CouplingModel dec{2, 800e-12, 1e-30};
    std::vector<double> f{1e-15, 2e-15};
    double expect = (f[0] * f[0] + f[1] * f[1]) / (2.0 * dec.L);
    CHECK(magnetic_energy(dec, f) == Approx(expect).epsilon(1e-6));

    // interior-supported flux vectors: first-order vs exact within 3 (M/L)^2
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CouplingModel m6{6, 800e-12, 0.032 * 800e-12};
    for (int t = 0; t < 20; ++t) {
        std::vector<double> phi(6, 0.0);
        for (int i = 1; i < 5; ++i) phi[i] = u(rng) * 1e-15;
        double ex = magnetic_energy_exact(m6, phi);
        double fo = magnetic_energy(m6, phi);
        CHECK(std::abs(ex - fo) / ex < 3.0 * m6.ratio() * m6.ratio());
    }
}

TEST_CASE("exact energy is positive definite") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CouplingModel m{5, 800e-12, 0.15 * 800e-12};
    for (int t = 0; t < 50; ++t) {
        std::vector<double> phi(5);
        for (auto& x : phi) x = u(rng) * 1e-15;
        CHECK(magnetic_energy_exact(m, phi) > 0.0);
    }
}

TEST_CASE("first-order tridiagonal inverse") {
    CouplingModel m{4, 800e-12, 0.032 * 800e-12};
    Eigen::MatrixXd A = tridiagonal_matrix(m);
    Eigen::MatrixXd B = tridiagonal_inverse_first_order(m);
    double dev = (A * B - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff();
    CHECK(dev < 3.0 * m.ratio() * m.ratio());
    CHECK(dev < 3.1e-3);

    // exact quadratic scaling: halving M/L reduces the deviation 4x
    CouplingModel half{4, 800e-12, 0.016 * 800e-12};
    Eigen::MatrixXd Ah = tridiagonal_matrix(half);
    Eigen::MatrixXd Bh = tridiagonal_inverse_first_order(half);
    double devh = (Ah * Bh - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff();
    CHECK(dev / devh == Approx(4.0).epsilon(0.2));

    // M = 0 gives the identity
    CouplingModel id{4, 800e-12, 1e-30};
    CHECK((tridiagonal_inverse_first_order(id) - Eigen::MatrixXd::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    // 3x3 analytic inverse differs from first order at (M/L)^2 scale
    CouplingModel m3{3, 1.0, 0.1};
    Eigen::MatrixXd exact = tridiagonal_matrix(m3).inverse();
    double diff = (exact - tridiagonal_inverse_first_order(m3)).cwiseAbs().maxCoeff();
    CHECK(diff > 0.005);
    CHECK(diff < 0.03);
}

TEST_CASE("device to spin-chain mapping") {
    double L = 800e-12;
    int N = 4;
    double delta = 1.1e-23;

    // the R = 1 condition M/L = L N^2 delta / phi0^2
    double ml = L * N * N * delta / (constants::phi0 * constants::phi0);
    CHECK(ml == Approx(3.2e-2).epsilon(0.03));
    IsingParams p = map_to_ising(L, ml * L, N, delta, 0.0);
    CHECK(p.R() == Approx(1.0).epsilon(1e-12));

    // round trip through the inverse
    for (double Rt : {0.3, 0.57, 0.83, 1.0}) {
        double M = required_mutual_for_R(L, N, delta, Rt);
        CHECK(map_to_ising(L, M, N, delta, 0.0).R() == Approx(Rt).epsilon(1e-12));
    }
    CHECK(required_mutual_for_R(L, N, delta, 0.57) / L == Approx(3.2e-2 / 0.57).epsilon(0.03));

    // delta = 0 is the classical chain
    CHECK(map_to_ising(L, ml * L, N, 0.0, 1e-25).h == 0.0);

    // eps carries half the asymmetry energy
    CHECK(map_to_ising(L, ml * L, N, delta, 1e-25).eps == Approx(0.5e-25).epsilon(1e-12));
}

TEST_CASE("ratio guard") {
    CouplingModel bad{4, 1.0, 0.25};
    CHECK_THROWS_AS(bad.validate(), RatioTooLarge);
    CHECK_THROWS_AS(required_mutual_for_R(800e-12, 4, 1.1e-23, 0.005), RatioTooLarge);
}
