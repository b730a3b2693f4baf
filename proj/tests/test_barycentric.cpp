#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "berrut/barycentric.hpp"
#include "berrut/models.hpp"

using namespace berrut;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("denominator hand values") {
    CHECK(denominator(1, 0.0) == doctest::Approx(2.0).epsilon(1e-15));

    const double d5 = denominator(5, 0.0) / 5.0;
    CHECK(d5 > 0.0); // iota = 2, so the sign is +
    CHECK(std::fabs(d5) >= 1.0);
    CHECK(d5 == doctest::Approx(26.0 / 15.0).epsilon(1e-14));

    const double d = denominator(10001, 0.0) / 10001.0;
    CHECK(std::fabs(std::fabs(d) - kPi / 2.0) <= 5e-3);

    CHECK_THROWS_AS(denominator(4, 0.0), std::domain_error);
    CHECK_THROWS_WITH(denominator(4, 0.5), "node singularity");
}

TEST_CASE("numerator hand values") {
    SUBCASE("constants factor out") {
        const double c = 2.5;
        const SampledFunction s = SampledFunction::sample([&](double) { return c; }, 31);
        for (double x : {-0.9, -0.123, 0.37, 0.777}) {
            const double n = numerator(s, x);
            const double d = denominator(31, x);
            CHECK(std::fabs(n - c * d) <= 1e-13 * std::fabs(c * d));
        }
    }
    SUBCASE("two and three term sums") {
        const SampledFunction s1(UniformGrid(1), {0.0, 2.0});
        CHECK(numerator(s1, 0.0) == doctest::Approx(2.0).epsilon(1e-15));

        const SampledFunction s2(UniformGrid(2), {1.0, 0.0, 1.0});
        CHECK(numerator(s2, 0.5) == doctest::Approx(-4.0 / 3.0).epsilon(1e-15));
    }
}

TEST_CASE("evaluate interpolates and reproduces") {
    const auto f = [](double x) { return std::cos(3.0 * x) + 0.5 * x; };
    for (int n : {1, 2, 3, 17, 50}) {
        const SampledFunction s = SampledFunction::sample(f, n);
        for (int k = 0; k <= n; ++k) {
            const double xk = s.grid.node(k);
            CHECK(evaluate(s, WeightScheme::berrut(), xk) ==
                  s.values[static_cast<std::size_t>(k)]);
            CHECK(evaluate(s, WeightScheme::endpoint_halved(), xk) ==
                  s.values[static_cast<std::size_t>(k)]);
        }
    }

    SUBCASE("constants to 1e-13 under both schemes") {
        const double c = -3.25;
        for (int n : {10, 100, 1000, 10000}) {
            const SampledFunction s = SampledFunction::sample([&](double) { return c; }, n);
            for (double x : {-0.987, -0.5001, 0.25, 0.99}) {
                CHECK(std::fabs(evaluate(s, WeightScheme::berrut(), x) - c) <=
                      1e-13 * std::fabs(c));
                CHECK(std::fabs(evaluate(s, WeightScheme::endpoint_halved(), x) - c) <=
                      1e-13 * std::fabs(c));
            }
        }
    }

    SUBCASE("endpoint-halved weights reproduce linears") {
        const auto lin = [](double x) { return 0.75 - 1.5 * x; };
        const SampledFunction s = SampledFunction::sample(lin, 50);
        const double x = 0.123;
        CHECK(std::fabs(evaluate(s, WeightScheme::endpoint_halved(), x) - lin(x)) <= 1e-10);
    }

    SUBCASE("custom weights reject zeros and wrong arity") {
        CHECK_THROWS_AS(WeightScheme::custom({1.0, 0.0, 1.0}), std::invalid_argument);
        const SampledFunction s = SampledFunction::sample([](double x) { return x; }, 3);
        const WeightScheme w = WeightScheme::custom({0.5, -1.0, 1.0});
        CHECK_THROWS_AS(evaluate(s, w, 0.1), std::invalid_argument);
    }
}

TEST_CASE("berrut evaluate equals numerator over denominator") {
    const auto f = [](double x) { return std::exp(x) * std::sin(2.0 * x); };
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    std::uniform_int_distribution<int> un(1, 400);
    for (int i = 0; i < 500; ++i) {
        const int n = un(rng);
        const double x = ux(rng);
        if (x <= -1.0 || x >= 1.0 || decompose(n, x).is_node) continue;
        const SampledFunction s = SampledFunction::sample(f, n);
        const double via_eval = evaluate(s, WeightScheme::berrut(), x);
        const double via_parts = numerator(s, x) / denominator(n, x);
        CHECK(std::fabs(via_eval - via_parts) <=
              2.3e-16 * std::max(1.0, std::fabs(via_parts)));
    }
}

TEST_CASE("denominator sign and scale laws") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    std::uniform_int_distribution<int> un(1, 5000);
    for (int i = 0; i < 10000; ++i) {
        const int n = un(rng);
        const double x = ux(rng);
        if (x <= -1.0 || x >= 1.0) continue;
        const PositionDecomposition d = decompose(n, x);
        if (d.is_node) continue;
        const double D = denominator(n, x);
        CHECK((D > 0.0) == (d.iota % 2 == 0));
        CHECK(std::fabs(D) / n >= 1.0 - 1e-12);
    }
}

TEST_CASE("probe grid and sup_error") {
    const std::vector<double> xs = probe_grid(5);
    const double expected[] = {-0.8, -0.4, 0.0, 0.4, 0.8};
    REQUIRE(xs.size() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(xs[static_cast<std::size_t>(i)] ==
              doctest::Approx(expected[i]).epsilon(1e-15));
    CHECK_THROWS_AS(probe_grid(1), std::invalid_argument);

    SUBCASE("constants stay flat") {
        for (int n : {7, 128})
            CHECK(sup_error([](double) { return 4.0; }, n, WeightScheme::berrut(), 2001) <=
                  1e-13 * 4.0);
    }

    SUBCASE("odd grids reproduce linears to rounding") {
        // n odd makes the node sum of a linear function proportional to the
        // denominator sum, so the error is pure noise; pin a small ceiling.
        const FunctionModel& lin = model_by_name("linear");
        for (int n : {11, 101, 1001})
            CHECK(n * sup_error(lin.f, n, WeightScheme::berrut(), 2001) <= 1e-10);
    }

    SUBCASE("quadratic decays at first order") {
        const FunctionModel& quad = model_by_name("quadratic");
        const double e100 = sup_error(quad.f, 100, WeightScheme::berrut(), 2001);
        const double e1000 = sup_error(quad.f, 1000, WeightScheme::berrut(), 2001);
        CHECK(e1000 / e100 >= 0.05);
        CHECK(e1000 / e100 <= 0.2);
    }

    SUBCASE("halving the endpoint weights beats first order") {
        const FunctionModel& e = model_by_name("exp");
        double prev = 1e300;
        double first = 0.0, last = 0.0;
        for (int n : {101, 401, 1601}) {
            const double scaled =
                n * sup_error(e.f, n, WeightScheme::endpoint_halved(), 2001);
            if (first == 0.0) first = scaled;
            last = scaled;
            CHECK(scaled < prev);
            prev = scaled;
        }
        CHECK(last <= first / 3.0);
    }
}
