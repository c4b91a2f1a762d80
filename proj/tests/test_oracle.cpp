#include "fracsl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fracsl/errors.hpp"
#include "fracsl/grid.hpp"
#include "fracsl/quadrature.hpp"

using namespace fracsl;

TEST_CASE("classical closed form satisfies the boundary data") {
    const double lambda = -(std::numbers::pi / 2.0) * (std::numbers::pi / 2.0);
    CHECK(analytic_alpha1(lambda, 1.0, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(analytic_alpha1(lambda, 1.0, 1.0, 0.0) == 0.0);
    CHECK(analytic_alpha1(lambda, 1.0, 1.0, 1.0 / 3.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("resonant and non-negative lambdas are rejected") {
    CHECK_THROWS_AS(analytic_alpha1(-std::numbers::pi * std::numbers::pi, 1.0, 1.0, 0.5),
                    ResonantLambdaError);
    CHECK_THROWS_AS(
        analytic_alpha1(-4.0 * std::numbers::pi * std::numbers::pi, 1.0, 1.0, 0.5),
        ResonantLambdaError);  // k = 2
    CHECK_THROWS_AS(analytic_alpha1(3.0, 1.0, 1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(analytic_alpha1(0.0, 1.0, 1.0, 0.5), std::domain_error);
}

TEST_CASE("power-law special case") {
    CHECK(power_law_solution(0.5, 1.0, 1.0, 0.25) == 0.5);
    for (double alpha : {0.1, 0.4, 0.9, 1.0}) {
        CHECK(power_law_solution(alpha, 1.0, 1.0, 0.0) == 0.0);
        CHECK(power_law_solution(alpha, 1.0, 1.0, 1.0) == 1.0);
        CHECK(power_law_solution(alpha, 2.0, -3.0, 2.0) == -3.0);
    }
}

TEST_CASE("reference integral of a constant matches the closed form") {
    for (double alpha : {0.3, 0.5, 0.9, 1.0}) {
        for (double t : {0.25, 0.75, 1.0}) {
            const double got = direct_left_integral([](double) { return 1.0; }, alpha, t);
            const double expected = std::pow(t, alpha) / std::tgamma(1.0 + alpha);
            CHECK(got == doctest::Approx(expected).epsilon(1e-10));
        }
    }
    CHECK(direct_left_integral([](double) { return 0.0; }, 0.5, 1.0) == 0.0);
    CHECK(direct_left_integral([](double) { return 1.0; }, 0.5, 0.0) == 0.0);
}

TEST_CASE("reference integral of the identity matches the power rule") {
    // integral of tau with alpha = 0.5 at t = 1 equals 1 / Gamma(2.5)
    const double got = direct_left_integral([](double x) { return x; }, 0.5, 1.0);
    CHECK(got == doctest::Approx(1.0 / std::tgamma(2.5)).epsilon(1e-10));
    CHECK(got == doctest::Approx(0.7522527781).epsilon(1e-9));
}

TEST_CASE("unstable integrands are reported, not silently accepted") {
    OracleConfig cfg;
    cfg.resolution = 8;
    auto wild = [](double x) { return std::sin(1e5 * x); };
    CHECK_THROWS_AS(direct_left_integral(wild, 0.5, 1.0, cfg), OracleNotConvergedError);
    CHECK_THROWS_AS(direct_left_integral([](double) { return 1.0; }, 1.5, 1.0),
                    std::domain_error);
}

TEST_CASE("discrete operator converges to the reference at order about 1+alpha") {
    auto phi = [](double x) { return std::cos(3.0 * x); };
    for (double alpha : {0.5, 1.0}) {
        double errs[2];
        std::size_t idx = 0;
        for (std::size_t n : {32ul, 64ul}) {
            auto grid = make_grid(n, 1.0);
            auto ws = WeightSet::build(alpha, grid);
            std::vector<double> values(grid.point_count());
            for (std::size_t i = 0; i <= n; ++i) values[i] = phi(grid.node(i));
            auto g = apply_left_integral(values, ws);
            // floor the starting resolution: the stability loop needs a few
            // thousand panels before halving stops moving the eighth digit
            OracleConfig cfg{std::max<std::size_t>(8 * n, 2048)};
            double worst = 0.0;
            for (std::size_t i = 1; i <= n; ++i)
                worst = std::max(worst,
                                 std::abs(g[i] - direct_left_integral(phi, alpha,
                                                                      grid.node(i), cfg)));
            errs[idx++] = worst;
        }
        const double order = std::log2(errs[0] / errs[1]);
        CHECK(order > 1.0 + alpha - 0.25);
        CHECK(order < 1.0 + alpha + 0.12);
    }
}
