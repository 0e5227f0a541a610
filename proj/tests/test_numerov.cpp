#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "fluxq/rf_squid.hpp"

using namespace fluxq;
using doctest::Approx;

namespace {

RfSquidParams reference_device(double C) {
    return {800e-12, C, std::sqrt(2.0) * M_PI / 4.0, 0.0};
}

// Dense central-difference oracle on the symmetric interval
// [-theta_max, theta_max], Dirichlet ends.
std::pair<double, double> fd_two_lowest(double alpha, double beta,
                                        double step, double theta_max) {
    int half = static_cast<int>(std::round(theta_max / step));
    int n = 2 * half - 1;  // interior points
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
    double inv2 = 1.0 / (step * step);
    for (int i = 0; i < n; ++i) {
        double theta = (i - half + 1) * step;
        H(i, i) = 2.0 * inv2 + dimensionless_potential(theta, alpha, beta);
        if (i + 1 < n) {
            H(i, i + 1) = -inv2;
            H(i + 1, i) = -inv2;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
    return {es.eigenvalues()(0), es.eigenvalues()(1)};
}

} // namespace

TEST_CASE("harmonic limit") {
    SpectrumOptions opts;
    opts.grid_step = M_PI / 400.0;
    opts.n_levels = 10;
    opts.scan_extent = 60.0;
    double alpha = 2.0;
    auto levels = numerov_levels(alpha, 0.0, opts);
    REQUIRE(levels.size() == 10);
    for (int n = 0; n < 10; ++n)
        CHECK(levels[n] == Approx((2 * n + 1) * std::sqrt(alpha)).epsilon(1e-6));
}

TEST_CASE("tunnel splitting at the reference devices") {
    auto sp10 = numerov_spectrum(reference_device(10e-15));
    double d10 = units::energy_J_to_ueV(sp10.delta);
    CHECK(d10 > 64.0);
    CHECK(d10 < 70.0);

    auto sp100 = numerov_spectrum(reference_device(100e-15));
    double d100 = units::energy_J_to_ueV(sp100.delta);
    CHECK(d100 > 7.4);
    CHECK(d100 < 8.4);
}

TEST_CASE("finite-difference oracle agreement") {
    auto p = reference_device(10e-15);
    auto en = RfSquidEnergies::from(p);
    SpectrumOptions opts;
    opts.check_grid = false;
    auto levels = numerov_levels(en.alpha, p.beta, opts);
    auto [f0, f1] = fd_two_lowest(en.alpha, p.beta, opts.grid_step, opts.theta_max);
    CHECK(levels[0] == Approx(f0).epsilon(1e-4));
    CHECK(levels[1] == Approx(f1).epsilon(1e-4));
}

TEST_CASE("grid convergence") {
    auto p = reference_device(10e-15);
    SpectrumOptions coarse;
    coarse.check_grid = false;
    SpectrumOptions fine = coarse;
    fine.grid_step = coarse.grid_step / 2.0;
    double dc = numerov_spectrum(p, coarse).delta;
    double df = numerov_spectrum(p, fine).delta;
    CHECK(std::abs(dc - df) / df < 1e-3);
}

TEST_CASE("parity ordering") {
    for (double beta : {1.05, 1.11, 1.3, 1.6, 2.0}) {
        RfSquidParams p = reference_device(10e-15);
        p.beta = beta;
        auto en = RfSquidEnergies::from(p);
        SpectrumOptions opts;
        opts.check_grid = false;
        auto levels = numerov_levels(en.alpha, beta, opts);
        CHECK(levels[0] < levels[1]);  // even ground state below odd
    }
}

TEST_CASE("parameter uncertainty shifts the splitting by a few ueV at most") {
    auto p = reference_device(10e-15);
    auto en = RfSquidEnergies::from(p);
    SpectrumOptions opts;
    opts.check_grid = false;
    auto base = numerov_levels(en.alpha, p.beta, opts);
    double center = units::energy_J_to_ueV((base[1] - base[0]) * en.E_C);
    CHECK(center > 64.0);
    CHECK(center < 70.0);
    // a 1 percent shift in alpha or beta moves the splitting by under 3 ueV
    for (double da : {-0.01, 0.01}) {
        for (double db : {-0.01, 0.01}) {
            auto levels = numerov_levels(en.alpha * (1.0 + da),
                                         p.beta * (1.0 + db), opts);
            double delta = units::energy_J_to_ueV((levels[1] - levels[0]) * en.E_C);
            CHECK(std::abs(delta - center) < 3.0);
        }
    }
}
