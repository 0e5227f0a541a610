#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fluxq/ising_rg.hpp"

using namespace fluxq;
using doctest::Approx;

TEST_CASE("R' = R^2 on random points") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> logR(-2.3, 2.3);
    std::uniform_real_distribution<double> logJ(-25.0, -20.0);
    for (int i = 0; i < 1000; ++i) {
        double J = std::pow(10.0, logJ(rng) / 10.0);
        double R = std::exp(logR(rng));
        IsingParams p{J, R * J, 0.0};
        IsingParams q = rg_step(p);
        CHECK(q.R() == Approx(R * R).epsilon(1e-12));
    }
}

TEST_CASE("single-step closed forms") {
    // QCP fixed point
    IsingParams qcp{1.0, 1.0, 0.0};
    IsingParams q = rg_step(qcp);
    CHECK(q.h == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(q.J == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(q.R() == Approx(1.0).epsilon(1e-12));

    // longitudinal growth at the QCP
    IsingParams qe{1.0, 1.0, 1e-4};
    CHECK(rg_step(qe).eps / qe.eps ==
          Approx((3.0 + 2.0 * std::sqrt(2.0)) / (2.0 * std::sqrt(2.0))).epsilon(1e-12));

    // classical limit
    IsingParams cl{1.0, 0.0, 1e-4};
    IsingParams c = rg_step(cl);
    CHECK(c.h == 0.0);
    CHECK(c.J == Approx(1.0).epsilon(1e-12));
    CHECK(c.eps == Approx(2e-4).epsilon(1e-12));

    // normalized equivalent forms
    for (double R : {0.3, 0.57, 0.83, 1.0, 1.4}) {
        IsingParams p{2.0, 2.0 * R, 1e-4};
        IsingParams r = rg_step(p);
        double root = std::sqrt(1.0 + R * R);
        CHECK(r.J == Approx(p.J / root).epsilon(1e-12));
        CHECK(r.h == Approx(R * p.h / root).epsilon(1e-12));
        CHECK(r.eps == Approx(p.eps * (1.0 + (1.0 + 2.0 * R * R) /
                                                 std::pow(1.0 + R * R, 1.5)))
                           .epsilon(1e-12));
    }
}

TEST_CASE("longitudinal field scales linearly") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(1e-9, 1e-2);
    IsingParams base{1.0, 0.57, 1e-6};
    double ref = rg_step(base).eps / base.eps;
    for (int i = 0; i < 100; ++i) {
        IsingParams p = base;
        p.eps = u(rng) * std::min(p.J, p.h) * 0.1;
        CHECK(rg_step(p).eps / p.eps == Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("flow basins are monotone") {
    for (double R0 : {0.3, 0.7, 0.95}) {
        RgTrajectory t = rg_flow({1.0, R0, 0.0}, 4);
        for (size_t k = 1; k < t.steps.size(); ++k)
            CHECK(t.steps[k].R() < t.steps[k - 1].R());
    }
    for (double R0 : {1.05, 1.5, 3.0}) {
        RgTrajectory t = rg_flow({1.0, R0, 0.0}, 3);
        for (size_t k = 1; k < t.steps.size(); ++k)
            CHECK(t.steps[k].R() > t.steps[k - 1].R());
    }
}

TEST_CASE("growth exponents at the critical point") {
    IsingParams p{1.0, 1.0, 1e-5};
    double eps_one_step = rg_step(p).eps / p.eps;
    RgTrajectory t = rg_flow(p, 4);
    for (int k = 1; k <= 4; ++k) {
        CHECK(t.steps[k].h / p.h == Approx(std::pow(2.0, -k / 2.0)).epsilon(1e-12));
        CHECK(t.steps[k].eps / p.eps == Approx(std::pow(eps_one_step, k)).epsilon(1e-12));
    }
    // eps grows as (block size)^1.043
    CHECK(std::log2(eps_one_step) == Approx(1.043).epsilon(1e-3));
}

TEST_CASE("two-step ratios match the iterated flow") {
    for (int i = 1; i <= 30; ++i) {
        double R = 0.05 * i;
        TwoStepRatios c = two_step_ratios(R);
        IsingParams p{1.0, R, 1e-7};
        RgTrajectory t = rg_flow(p, 2);
        CHECK(c.h_ratio == Approx(t.steps[2].h / p.h).epsilon(1e-12));
        CHECK(c.eps_ratio == Approx(t.steps[2].eps / p.eps).epsilon(1e-12));
    }
}

TEST_CASE("quoted two-step values") {
    CHECK(two_step_ratios(0.57).h_ratio == Approx(0.153).epsilon(0.005));
    CHECK(two_step_ratios(1.0).h_ratio == Approx(0.5).epsilon(1e-12));

    auto r083 = two_step_ratios(0.83);
    CHECK(r083.h_ratio == Approx(0.362).epsilon(0.01));
    CHECK(r083.eps_ratio == Approx(4.351).epsilon(0.01));

    CHECK(two_step_ratios(0.57).h_ratio / two_step_ratios(0.57).eps_ratio ==
          Approx(0.036).epsilon(0.02));
    CHECK(r083.h_ratio / r083.eps_ratio == Approx(0.083).epsilon(0.02));
    CHECK(two_step_ratios(1.0).h_ratio / two_step_ratios(1.0).eps_ratio ==
          Approx(0.1177).epsilon(0.02));
}

TEST_CASE("validity guard on the longitudinal field") {
    IsingParams p{1.0, 0.5, 0.2};
    CHECK_THROWS_AS(rg_step(p), LongitudinalTooLarge);
}

TEST_CASE("infinite-chain correlator") {
    CHECK(correlator_infinite_chain(-0.5, 3) == Approx(1.0).epsilon(1e-12));
    CHECK(correlator_infinite_chain(-1.0, 1) == Approx(std::pow(2.0, 0.25)).epsilon(1e-12));
    // paramagnetic asymptote (2 pi^2 n^2 kappa)^(-1/4) e^(-n kappa)
    double expect = std::pow(2.0 * M_PI * M_PI * 100.0 * 0.1, -0.25) * std::exp(-1.0);
    CHECK(correlator_infinite_chain(0.1, 10) == Approx(expect).epsilon(1e-12));
    CHECK(expect == Approx(0.0982).epsilon(0.01));
    CHECK_THROWS_AS(correlator_infinite_chain(0.0, 5), AtCriticality);
}

TEST_CASE("polarization mapping") {
    CHECK(polarization_to_R(0.90) == Approx(0.5695).epsilon(1e-3));
    CHECK(polarization_to_R(0.80) == Approx(0.8322).epsilon(1e-3));
    CHECK(polarization_to_R(1.0) == Approx(0.0).epsilon(1e-14));
    for (double P : {0.5, 0.8, 0.9, 0.99})
        CHECK(R_to_polarization(polarization_to_R(P)) == Approx(P).epsilon(1e-12));
    // exact near-critical form (2|kappa|)^{1/8}
    CHECK(exact_polarization(-0.5) == Approx(1.0).epsilon(1e-12));
}
