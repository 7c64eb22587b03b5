#include <doctest.h>

#include <cmath>
#include <random>

#include "h2plan/error.hpp"
#include "h2plan/guidance.hpp"

using namespace h2plan;
using namespace h2plan::guidance;

TEST_CASE("step-index V number") {
    const auto multi = v_number(2e-6, 0.12, 313e-9);
    CHECK(std::abs(multi.v - 2 * M_PI * 2e-6 * 0.12 / 313e-9) < 1e-12);
    CHECK(std::abs(multi.v - 4.82) <= 0.01);
    CHECK_FALSE(multi.single_mode);
    const auto tiny = v_number(2e-6, 1e-9, 313e-9);
    CHECK(tiny.v < 1e-6);
    CHECK(tiny.single_mode);
    const double lambda = 2 * M_PI * 3e-6 * 0.1 / kStepIndexCutoff;
    const auto edge = v_number(3e-6, 0.1, lambda);
    CHECK(edge.v == doctest::Approx(kStepIndexCutoff).epsilon(1e-15));
    CHECK(edge.single_mode);
    CHECK_THROWS_AS((void)v_number(-1e-6, 0.1, 313e-9), DomainError);
}

TEST_CASE("photonic crystal V number") {
    const auto r = v_pcf(6e-6, IndexData(0.026), 313e-9);
    CHECK(std::abs(r.v - 3.13) <= 0.01);
    CHECK(r.single_mode);
    const double na = M_PI * 313e-9 / (2 * M_PI * 6e-6);
    const auto edge = v_pcf(6e-6, IndexData(na), 313e-9);
    CHECK(edge.v == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(v_pcf(12e-6, IndexData(0.026), 313e-9).v == doctest::Approx(2 * r.v).epsilon(1e-15));
}

TEST_CASE("V is homogeneous of degree zero") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> lc(-3.0, 3.0);
    const IndexData index(0.04);
    for (int i = 0; i < 1000; ++i) {
        const double c = std::exp(lc(rng));
        REQUIRE(v_number(2e-6 * c, 0.1, 500e-9 * c).v == doctest::Approx(v_number(2e-6, 0.1, 500e-9).v).epsilon(1e-14));
        REQUIRE(v_pcf(6e-6 * c, index, 500e-9 * c).v == doctest::Approx(v_pcf(6e-6, index, 500e-9).v).epsilon(1e-14));
    }
}

TEST_CASE("tabulated index data") {
    const IndexData table({{300e-9, 0.02}, {400e-9, 0.04}, {600e-9, 0.05}});
    CHECK(table.numerical_aperture(350e-9) == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(table.numerical_aperture(300e-9) == 0.02);
    CHECK(table.numerical_aperture(600e-9) == 0.05);
    CHECK_THROWS_AS((void)v_pcf(6e-6, table, 700e-9), RangeError);
    CHECK_THROWS_AS((void)v_pcf(6e-6, table, 200e-9), RangeError);
    CHECK_THROWS_AS(IndexData({{400e-9, 0.02}, {300e-9, 0.04}}), DataError);
    CHECK_THROWS_AS(IndexData(std::vector<IndexSample>{}), DataError);
}

TEST_CASE("critical bend radius scaling") {
    const auto params = lma_pm_10_bend();
    const double r313 = critical_bend_radius(6e-6, 313e-9, params);
    const double r626 = critical_bend_radius(6e-6, 626e-9, params);
    CHECK(r313 == doctest::Approx(0.035).epsilon(1e-15));
    CHECK(r313 / r626 == 4.0);
    CHECK(r626 / r313 == 0.25);
    CHECK(r626 == doctest::Approx(0.00875).epsilon(1e-14));
    CHECK(critical_bend_radius(12e-6, 313e-9, params) / r313 == doctest::Approx(8.0).epsilon(1e-15));
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double a = u(rng);
        const double b = u(rng);
        const double scaled = critical_bend_radius(6e-6 * a, 313e-9 * b, params);
        REQUIRE(scaled == doctest::Approx(r313 * a * a * a / (b * b)).epsilon(1e-14));
    }
    auto uncalibrated = params;
    uncalibrated.calibration.reset();
    CHECK_THROWS_AS((void)critical_bend_radius(6e-6, 313e-9, uncalibrated), ConfigError);
    auto odd = params;
    odd.calibration = BendCalibration{313e-9, 5.0};
    CHECK_THROWS_AS(odd.validate(), ConfigError);
}

TEST_CASE("bend loss curve") {
    const auto params = lma_pm_10_bend();
    std::vector<double> radii;
    for (double r = 0.02; r <= 0.1 + 1e-12; r += 0.002) radii.push_back(r);
    const auto c313 = bend_loss_curve(radii, 313e-9, params);
    REQUIRE(c313.size() == radii.size());
    for (std::size_t i = 0; i < c313.size(); ++i) {
        CHECK(c313[i].radius == radii[i]);
        CHECK(c313[i].attenuation >= 0.0);
        if (i > 0) CHECK(c313[i].attenuation < c313[i - 1].attenuation);
    }
    std::vector<double> small;
    for (double r = 0.002; r < 0.035; r += 0.001) small.push_back(r);
    const auto a313 = bend_loss_curve(small, 313e-9, params);
    const auto a626 = bend_loss_curve(small, 626e-9, params);
    for (std::size_t i = 0; i < small.size(); ++i) {
        CHECK(a313[i].attenuation >= 0.0);
        CHECK(a626[i].attenuation >= 0.0);
        if (a626[i].attenuation > 0.0) CHECK(a313[i].attenuation > a626[i].attenuation);
    }
    CHECK(bend_loss_curve({INFINITY}, 313e-9, params).front().attenuation == 0.0);
    CHECK(bend_loss_curve({10.0}, 313e-9, params).front().attenuation < 1e-12);
    CHECK_THROWS_AS((void)bend_loss_curve({}, 313e-9, params), UsageError);
}

TEST_CASE("knee radius scales with inverse wavelength squared") {
    const auto params = lma_pm_10_bend();
    const double k313 = knee_radius(313e-9, params, 6e-6);
    const double k626 = knee_radius(626e-9, params, 6e-6);
    CHECK(k313 / k626 == doctest::Approx(4.0).epsilon(0.10));
    CHECK(bend_loss_curve({k313}, 313e-9, params).front().attenuation == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("equivalent step-index eigenvalues") {
    const auto [u, w] = equivalent_step_index_modes(3.75);
    CHECK(u * u + w * w == doctest::Approx(3.75 * 3.75).epsilon(1e-12));
    // LP01: U J1(U)/J0(U) = W K1(W)/K0(W)
    CHECK(u * std::cyl_bessel_j(1.0, u) / std::cyl_bessel_j(0.0, u) ==
          doctest::Approx(w * std::cyl_bessel_k(1.0, w) / std::cyl_bessel_k(0.0, w)).epsilon(1e-10));
    CHECK(u > 0.0);
    CHECK(u < 2.405);
}
