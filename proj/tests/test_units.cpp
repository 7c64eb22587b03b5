#include <doctest.h>

#include <cmath>
#include <random>

#include "h2plan/error.hpp"
#include "h2plan/units.hpp"

using namespace h2plan;
using namespace h2plan::units;

TEST_CASE("to_si definitional conversions") {
    CHECK(to_si(100.0, "bar").value == 1.0e7);
    CHECK(to_si(100.0, "bar").dimension == Dimension::pressure);
    CHECK(to_si(20.0, "C").value == doctest::Approx(293.15).epsilon(1e-15));
    CHECK(to_si(20.0, "degC").dimension == Dimension::temperature);
    CHECK(to_si(40.19, "kJ/mol").value == doctest::Approx(40190.0).epsilon(1e-15));
    CHECK(to_si(115.0, "um").value == doctest::Approx(115e-6).epsilon(1e-15));
    CHECK(to_si(2.0, "d").value == 172800.0);
    CHECK(to_si(3.0, "h").value == 10800.0);
    CHECK(to_si(20.0, "mW").value == doctest::Approx(0.02).epsilon(1e-15));
    CHECK(to_si(2.83e-4, "cm2/s").value == doctest::Approx(2.83e-8).epsilon(1e-15));
    CHECK(to_si(3.5, "cm").value == doctest::Approx(0.035).epsilon(1e-15));
    CHECK(to_si(1.0, "mm").value == doctest::Approx(1e-3).epsilon(1e-15));
    CHECK(to_si(5.0, "s").value == 5.0);
    CHECK(to_si(1.0, "W").value == 1.0);
    CHECK(to_si(1.0, "Pa").value == 1.0);
    CHECK(to_si(300.0, "K").value == 300.0);
}

TEST_CASE("to_si rejects unknown units and unphysical values") {
    CHECK_THROWS_AS((void)to_si(1.0, "furlong"), UsageError);
    CHECK_THROWS_AS((void)to_si(1.0, ""), UsageError);
    CHECK_THROWS_AS((void)to_si(-300.0, "C"), DomainError);
    CHECK_THROWS_AS((void)to_si(0.0, "K"), DomainError);
    CHECK_THROWS_AS((void)to_si(-1.0, "bar"), DomainError);
}

TEST_CASE("constants") {
    const auto& c = constants();
    CHECK(c.boltzmann == 1.380649e-23);
    CHECK(c.avogadro == 6.02214076e23);
    CHECK(c.planck == 6.62607015e-34);
    // Oracle: 2 x standard atomic weight of H (1.00794) x atomic mass constant.
    CHECK(c.h2_molecular_mass == doctest::Approx(2.0 * 1.00794 * 1.66053906660e-27).epsilon(1e-15));
    CHECK(c.gas_constant() == doctest::Approx(8.314462618).epsilon(1e-9));
    CHECK(c.boltzmann > 0.0);
    CHECK(c.planck > 0.0);
    CHECK(c.h2_molecular_mass > 3.3e-27);  // molecular, not atomic
}

TEST_CASE("parse_quantity requires unit suffixes") {
    CHECK(parse_quantity("160bar").value == 1.6e7);
    CHECK(parse_quantity("2e20cm-3").value == doctest::Approx(2e26).epsilon(1e-15));
    CHECK(parse_quantity("60C").value == doctest::Approx(333.15).epsilon(1e-15));
    CHECK(parse_quantity("313nm").value == doctest::Approx(313e-9).epsilon(1e-15));
    CHECK(parse_quantity("1.5e-3h").value == doctest::Approx(5.4).epsilon(1e-14));
    CHECK_THROWS_AS((void)parse_quantity("160"), UsageError);
    CHECK_THROWS_AS((void)parse_quantity("bar"), UsageError);
    CHECK_THROWS_AS((void)parse_quantity("12parsecs"), UsageError);
    CHECK_THROWS_AS((void)parse_si("160bar", Dimension::temperature), UsageError);
}

TEST_CASE("every declared unit parses and converts to its dimension") {
    for (auto u : {Unit::bar, Unit::pascal, Unit::celsius, Unit::kelvin, Unit::metre, Unit::centimetre,
                   Unit::millimetre, Unit::micrometre, Unit::nanometre, Unit::second, Unit::minute, Unit::hour,
                   Unit::day, Unit::watt, Unit::milliwatt, Unit::joule, Unit::kilojoule, Unit::m2_per_s,
                   Unit::cm2_per_s, Unit::per_m3, Unit::per_cm3, Unit::j_per_mol, Unit::kj_per_mol}) {
        CHECK(parse_unit(symbol(u)) == u);
        const auto q = to_si(1.0, u);
        CHECK(q.dimension == dimension_of(u));
        CHECK(from_si(q, u) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mant(1.0, 2.0);
    std::uniform_int_distribution<int> expo(-20, 20);
    for (int i = 0; i < 100000; ++i) {
        const double x = std::ldexp(mant(rng), expo(rng));
        const double back = from_si(to_si(x, Unit::bar), Unit::bar);
        REQUIRE(std::abs(back - x) <= std::nextafter(x, INFINITY) - x);
    }
    // Celsius is affine: the round trip is exact to one ulp of the kelvin
    // intermediate, not of the input (0.1 degC cannot survive +273.15 exactly).
    std::uniform_real_distribution<double> celsius(-200.0, 1000.0);
    for (int i = 0; i < 100000; ++i) {
        const double c = celsius(rng);
        const double k = to_si(c, Unit::celsius).value;
        const double back = from_si({k, Dimension::temperature}, Unit::celsius);
        REQUIRE(std::abs(back - c) <= std::nextafter(k, INFINITY) - k);
    }
    CHECK(from_si(to_si(20.0, Unit::celsius), Unit::celsius) == 20.0);
}
