#include <doctest.h>

#include <cmath>
#include <random>

#include "h2plan/bessel.hpp"
#include "h2plan/diffusion.hpp"
#include "h2plan/error.hpp"

using namespace h2plan;
using namespace h2plan::diffusion;

namespace {

struct SeriesRef {
    double r, theta, c_out;
};

// 30-digit mpmath sums of the Fourier-Bessel series.
constexpr SeriesRef kSeriesRefs[] = {
    {0.0, 0.2005, 0.50006823289408559},
    {0.5, 0.1, 0.61024678651478726},
    {0.3, 0.05, 0.94872171927468493},
    {0.9, 0.02, 0.34823241685946679},
    {0.0, 1.0, 0.0049323047308905343},
    {0.2, 0.5, 0.083822964058529217},
};

}  // namespace

TEST_CASE("theta") {
    CHECK(std::abs(theta(1.951e-11 * 1e-4, 1.359e6, 115e-6) - 0.2005) <= 1e-3);
    CHECK(theta(1e-15, 0.0, 115e-6) == 0.0);
    const double d = 1.95e-15;
    const double t = 1e5;
    CHECK(theta(d, t, 5e-6) / theta(d, t, 115e-6) == doctest::Approx(529.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)theta(d, -1.0, 1e-6), DomainError);
    CHECK_THROWS_AS((void)theta(d, 1.0, 0.0), DomainError);
}

TEST_CASE("scale_time") {
    CHECK(std::abs(scale_time(1.359e6, 115e-6, 5e-6) - 2569.0) <= 1.0);
    CHECK(scale_time(1234.5, 7e-6, 7e-6) == 1234.5);
    CHECK(scale_time(1234.5, 7e-6, 14e-6) == doctest::Approx(4 * 1234.5).epsilon(1e-15));
    const double t = 987654.321;
    CHECK(std::abs(t / scale_time(t, 115e-6, 5e-6) - 529.0) <= 529.0 * 1e-12);
}

TEST_CASE("series against high-precision references") {
    for (const auto& ref : kSeriesRefs) {
        CAPTURE(ref.r);
        CAPTURE(ref.theta);
        CHECK(std::abs(c_out(ref.r, ref.theta) - ref.c_out) < 1e-11);
    }
    CHECK(std::abs(c_out(0.0, 0.2005) - 0.5) <= 1e-3);
    CHECK(std::abs(c_in(0.0, 0.2005) - 0.5) <= 1e-3);
}

TEST_CASE("boundary and initial conditions") {
    for (double th : {1e-9, 1e-5, 0.01, 0.3, 5.0}) CHECK(c_out(1.0, th) == 0.0);
    for (double r = 0.0; r <= 0.5; r += 0.05) CHECK(c_out(r, 1e-9) >= 1.0 - 1e-6);
    CHECK(c_in(0.3, 0.0) == 0.0);
    for (double r = 0.0; r < 1.0; r += 0.1) CHECK(std::abs(c_in(r, 10.0) - 1.0) <= 1e-12);
    CHECK_THROWS_AS((void)c_out(1.2, 0.1), DomainError);
    CHECK_THROWS_AS((void)c_out(0.2, -0.1), DomainError);
}

TEST_CASE("complementarity") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> r(0.0, 0.99);
    std::uniform_real_distribution<double> lt(std::log(1e-5), std::log(20.0));
    for (int i = 0; i < 10000; ++i) {
        const double rf = r(rng);
        const double th = std::exp(lt(rng));
        REQUIRE(std::abs(c_in(rf, th) + c_out(rf, th) - 1.0) <= 1e-9);
    }
}

TEST_CASE("monotone in theta and in radius") {
    for (double rf : {0.0, 0.3, 0.6, 0.9, 0.99}) {
        double prev = 1.0;
        for (double lt = std::log(1e-5); lt < std::log(3.0); lt += 0.01) {
            const double v = c_out(rf, std::exp(lt));
            CAPTURE(rf);
            CAPTURE(std::exp(lt));
            REQUIRE(v <= prev);
            if (prev < 1.0 - 1e-12) REQUIRE(v < prev);
            prev = v;
        }
    }
    for (double th : {0.011, 0.05, 0.2, 1.0}) {
        double prev = 2.0;
        for (double rf = 0.0; rf <= 1.0; rf += 0.02) {
            const double v = c_out(rf, th);
            REQUIRE(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("self-similarity under radius scaling") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double d = 1e-15 * (1.0 + 9.0 * u(rng));
        const double rad = 1e-6 * (1.0 + 200.0 * u(rng));
        const double rad2 = 1e-6 * (1.0 + 200.0 * u(rng));
        const double t = 1e2 + 1e6 * u(rng);
        const double rf = 0.95 * u(rng);
        const double a = c_out(rf, theta(d, t, rad));
        const double b = c_out(rf, theta(d, scale_time(t, rad, rad2), rad2));
        REQUIRE(std::abs(a - b) <= 1e-12 * std::max(std::abs(a), 1e-300) + 1e-300);
    }
}

TEST_CASE("long-time radial profile") {
    const double expected = bessel::j0(0.2 * bessel::j0_zero(1));
    CHECK(std::abs(expected - 0.9430) <= 2e-4);
    for (double th : {0.5, 0.75, 1.0, 2.0, 5.0}) {
        CAPTURE(th);
        CHECK(std::abs(c_out(0.2, th) / c_out(0.0, th) - 0.943) <= 0.002);
    }
}

TEST_CASE("clamping only absorbs roundoff") {
    for (double rf = 0.0; rf < 1.0; rf += 0.01) {
        for (double lt = std::log(1e-9); lt < std::log(20.0); lt += 0.3) {
            const auto e = evaluate_out_series(rf, std::exp(lt));
            REQUIRE(e.clamp_magnitude() < 1e-6);
            REQUIRE(e.value >= 0.0);
            REQUIRE(e.value <= 1.0);
            REQUIRE(e.tail_bound <= kSeriesTolerance);
        }
    }
}

TEST_CASE("term count grows as theta shrinks and is capped") {
    CHECK(required_terms(1.0) < required_terms(1e-3));
    CHECK(required_terms(1e-3) < required_terms(1e-7));
    CHECK_THROWS_AS((void)c_out(0.5, 1e-14), ConvergenceError);
    try {
        (void)c_out(0.5, 1e-14);
    } catch (const ConvergenceError& e) {
        CHECK(std::string(e.what()).find("bound") != std::string::npos);
    }
}

TEST_CASE("time inversion") {
    CHECK(invert_time(0.5, 0.0, Direction::out_diffusion) == doctest::Approx(0.200524081410).epsilon(1e-9));
    CHECK(invert_time(0.8, 0.0, Direction::out_diffusion) == doctest::Approx(0.112876281498).epsilon(1e-9));
    CHECK(invert_time(0.1, 0.0, Direction::out_diffusion) == doctest::Approx(0.479634820340).epsilon(1e-9));
    for (double r : {0.0, 0.2, 0.5, 0.9}) {
        for (int k = 1; k <= 9; ++k) {
            const double x = 0.1 * k;
            const double tout = invert_time(x, r, Direction::out_diffusion);
            const double tin = invert_time(x, r, Direction::in_diffusion);
            CAPTURE(r);
            CAPTURE(x);
            CHECK(std::abs(c_out(r, tout) - x) <= 1e-9);
            CHECK(std::abs(c_in(r, tin) - x) <= 1e-9);
        }
    }
    CHECK_THROWS_AS((void)invert_time(1.0, 0.0, Direction::out_diffusion), DomainError);
    CHECK_THROWS_AS((void)invert_time(0.0, 0.0, Direction::out_diffusion), DomainError);
    CHECK_THROWS_AS((void)invert_time(0.5, 0.95, Direction::out_diffusion), DomainError);
}
