#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "berrut/barycentric.hpp"
#include "berrut/denom_asymptotics.hpp"
#include "berrut/grid.hpp"

using namespace berrut;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("limit scale anchors") {
    CHECK(std::fabs(limit_scale(0.0) - kPi / 2.0) <= 1e-10);
    CHECK(std::fabs(limit_scale(4.0 / 9.0) - kPi) <= 1e-10);
    // independently computed reference value
    CHECK(std::fabs(limit_scale(1.0 / 9.0) - 1.8137993642342178) <= 1e-11);
    CHECK(std::isinf(limit_scale(1.0)));
    CHECK(limit_scale(1.0) > 0.0);

    CHECK_THROWS_AS(limit_scale(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(limit_scale(1.1), std::invalid_argument);
    CHECK_THROWS_AS(limit_scale(0.5, SeriesConfig{1e-16, 1000000}), std::invalid_argument);
    CHECK_THROWS_AS(limit_scale(0.5, SeriesConfig{1e-12, 4}), std::invalid_argument);
}

TEST_CASE("pole-subtracted tail is pinched and decreasing") {
    CHECK(std::fabs(limit_scale_tail(0.0) - (kPi - 4.0) / 2.0) <= 1e-12);
    CHECK(std::fabs(limit_scale_tail(1.0) + 0.5) <= 1e-12);

    for (double r : {0.0, 0.25, 0.5, 0.99}) {
        const double t = limit_scale(r) - 2.0 / (1.0 - r);
        CHECK(t >= -0.5 - 1e-12);
        CHECK(t <= (kPi - 4.0) / 2.0 + 1e-12);
    }

    double prev = limit_scale(0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double r = i * (1.0 - 1e-6) / 1000.0;
        const double v = limit_scale(r);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("inverse of the limit scale") {
    CHECK(std::fabs(limit_scale_inverse(kPi / 2.0)) <= 1e-9);
    CHECK(limit_scale_inverse(std::numeric_limits<double>::infinity()) == 1.0);
    CHECK(std::fabs(limit_scale_inverse(limit_scale(0.37)) - 0.37) <= 1e-9);
    CHECK_THROWS_AS(limit_scale_inverse(1.5), std::invalid_argument);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ur(0.0, 1.0 - 1e-9);
    for (int i = 0; i < 100; ++i) {
        const double r = ur(rng);
        CHECK(std::fabs(limit_scale_inverse(limit_scale(r)) - r) <= 1e-9);
    }
}

TEST_CASE("scale residual obeys the tail bound") {
    CHECK_THROWS_WITH(scale_residual(4, 0.5), "node singularity");

    SUBCASE("half-cap at the center") {
        CHECK(scale_residual(101, 0.0) <= 0.5);
    }

    SUBCASE("quarter-cell form is slightly exceedable, the tail form is not") {
        const int n = 1001;
        const double x = 1.0 / kPi;
        const PositionDecomposition d = decompose(n, x);
        const double res = scale_residual(n, x);
        const double quarter = residual_bound_quarter(d.iota, n);
        const double tail = residual_bound_tail(d.iota, d.rho, n);
        CHECK(res <= tail + 1e-9);
        // the measured excess over the quarter-cell form is ~3.1e-8 here
        CHECK(res > quarter + 1e-9);
        CHECK(res - quarter < 1e-6);
    }

    SUBCASE("near-node overshoot of the quarter-cell form is order 0.1") {
        const int n = 11;
        const double x = -1.0 + (2.0 / 11.0) * 0.004; // first cell, rho near -1
        const PositionDecomposition d = decompose(n, x);
        REQUIRE_FALSE(d.is_node);
        REQUIRE(d.iota == 0);
        const double res = scale_residual(n, x);
        CHECK(res > residual_bound_quarter(d.iota, n) + 0.05);
        CHECK(res <= residual_bound_tail(d.iota, d.rho, n) + 1e-9);
        CHECK(res <= 0.5 + 1e-9);
    }

    SUBCASE("random sampling stays within the tail bound") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> ux(-1.0, 1.0);
        std::uniform_int_distribution<int> un(10, 5000);
        int done = 0;
        while (done < 1000) {
            const int n = un(rng);
            const double x = ux(rng);
            if (x <= -1.0 || x >= 1.0) continue;
            const PositionDecomposition d = decompose(n, x);
            if (d.is_node) continue;
            ++done;
            const double res = scale_residual(n, x);
            CHECK(res <= residual_bound_tail(d.iota, d.rho, n) + 1e-9 +
                             scale_residual_slack(n, d.rho));
            CHECK(res <= 0.5 + 1e-9);
        }
    }
}

TEST_CASE("scaled denominator converges to the limit scale") {
    const double x = std::sqrt(2.0) - 1.0;
    const int n = 100000;
    const PositionDecomposition d = decompose(n, x);
    REQUIRE_FALSE(d.is_node);
    const double ratio =
        std::fabs(denominator(n, x)) / (n * limit_scale(d.rho * d.rho));
    CHECK(std::fabs(ratio - 1.0) <= 0.01);
}

TEST_CASE("lower bounds on the scaled denominator") {
    // |D_n|/n >= S(rho^2)/2 >= 3/(4(1-rho^2))
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    std::uniform_int_distribution<int> un(2, 2000);
    for (int i = 0; i < 500; ++i) {
        const int n = un(rng);
        const double x = ux(rng);
        if (x <= -1.0 || x >= 1.0) continue;
        const PositionDecomposition d = decompose(n, x);
        if (d.is_node) continue;
        const double scaled = std::fabs(denominator(n, x)) / n;
        const double s = limit_scale(d.rho * d.rho);
        CHECK(scaled >= s / 2.0 - 1e-10);
        CHECK(s / 2.0 >= 3.0 / (4.0 * (1.0 - d.rho * d.rho)) - 1e-10);
    }
}
