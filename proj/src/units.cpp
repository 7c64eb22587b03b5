#include "h2plan/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "h2plan/error.hpp"

namespace h2plan::units {

namespace {

struct UnitInfo {
    Unit unit;
    std::string_view symbol;
    Dimension dimension;
    double scale;  // SI = value * scale + offset
    double offset;
};

constexpr std::array kUnits{
    UnitInfo{Unit::bar, "bar", Dimension::pressure, 1e5, 0.0},
    UnitInfo{Unit::pascal, "Pa", Dimension::pressure, 1.0, 0.0},
    UnitInfo{Unit::celsius, "C", Dimension::temperature, 1.0, kCelsiusOffset},
    UnitInfo{Unit::kelvin, "K", Dimension::temperature, 1.0, 0.0},
    UnitInfo{Unit::metre, "m", Dimension::length, 1.0, 0.0},
    UnitInfo{Unit::centimetre, "cm", Dimension::length, 1e-2, 0.0},
    UnitInfo{Unit::millimetre, "mm", Dimension::length, 1e-3, 0.0},
    UnitInfo{Unit::micrometre, "um", Dimension::length, 1e-6, 0.0},
    UnitInfo{Unit::nanometre, "nm", Dimension::length, 1e-9, 0.0},
    UnitInfo{Unit::second, "s", Dimension::time, 1.0, 0.0},
    UnitInfo{Unit::minute, "min", Dimension::time, 60.0, 0.0},
    UnitInfo{Unit::hour, "h", Dimension::time, 3600.0, 0.0},
    UnitInfo{Unit::day, "d", Dimension::time, 86400.0, 0.0},
    UnitInfo{Unit::watt, "W", Dimension::power, 1.0, 0.0},
    UnitInfo{Unit::milliwatt, "mW", Dimension::power, 1e-3, 0.0},
    UnitInfo{Unit::joule, "J", Dimension::energy, 1.0, 0.0},
    UnitInfo{Unit::kilojoule, "kJ", Dimension::energy, 1e3, 0.0},
    UnitInfo{Unit::m2_per_s, "m2/s", Dimension::diffusivity, 1.0, 0.0},
    UnitInfo{Unit::cm2_per_s, "cm2/s", Dimension::diffusivity, 1e-4, 0.0},
    UnitInfo{Unit::per_m3, "m-3", Dimension::concentration, 1.0, 0.0},
    UnitInfo{Unit::per_cm3, "cm-3", Dimension::concentration, 1e6, 0.0},
    UnitInfo{Unit::j_per_mol, "J/mol", Dimension::molar_energy, 1.0, 0.0},
    UnitInfo{Unit::kj_per_mol, "kJ/mol", Dimension::molar_energy, 1e3, 0.0},
};

// Alternative spellings accepted on input.
constexpr std::array<std::pair<std::string_view, Unit>, 12> kAliases{{
    {"degC", Unit::celsius},
    {"°C", Unit::celsius},
    {"\xC2\xB5m", Unit::micrometre},  // U+00B5 micro sign
    {"\xCE\xBCm", Unit::micrometre},  // U+03BC greek mu
    {"sec", Unit::second},
    {"hr", Unit::hour},
    {"day", Unit::day},
    {"days", Unit::day},
    {"cm^2/s", Unit::cm2_per_s},
    {"cm²/s", Unit::cm2_per_s},
    {"/cm3", Unit::per_cm3},
    {"cm⁻³", Unit::per_cm3},
}};

const UnitInfo& info(Unit unit) noexcept {
    for (const auto& u : kUnits) {
        if (u.unit == unit) return u;
    }
    return kUnits.front();  // unreachable: every enumerator is tabulated
}

void check_physical(const Quantity& q) {
    if (!std::isfinite(q.value)) {
        throw DomainError("non-finite quantity");
    }
    if (q.dimension == Dimension::temperature && q.value <= 0.0) {
        throw DomainError("temperature must be above absolute zero, got " + std::to_string(q.value) + " K");
    }
    if (q.dimension == Dimension::pressure && q.value < 0.0) {
        throw DomainError("pressure must be non-negative");
    }
}

}  // namespace

Dimension dimension_of(Unit unit) noexcept { return info(unit).dimension; }

std::string_view symbol(Unit unit) noexcept { return info(unit).symbol; }

std::string_view si_symbol(Dimension dim) noexcept {
    switch (dim) {
        case Dimension::pressure: return "Pa";
        case Dimension::temperature: return "K";
        case Dimension::length: return "m";
        case Dimension::time: return "s";
        case Dimension::diffusivity: return "m2/s";
        case Dimension::concentration: return "m-3";
        case Dimension::energy: return "J";
        case Dimension::power: return "W";
        case Dimension::molar_energy: return "J/mol";
    }
    return "";
}

Unit parse_unit(std::string_view tag) {
    for (const auto& u : kUnits) {
        if (u.symbol == tag) return u.unit;
    }
    for (const auto& [alias, unit] : kAliases) {
        if (alias == tag) return unit;
    }
    throw UsageError("unknown unit '" + std::string(tag) + "'");
}

Quantity to_si(double value, Unit unit) {
    const auto& u = info(unit);
    Quantity q{u.offset == 0.0 ? value * u.scale : value * u.scale + u.offset, u.dimension};
    check_physical(q);
    return q;
}

Quantity to_si(double value, std::string_view unit_tag) { return to_si(value, parse_unit(unit_tag)); }

double from_si(const Quantity& q, Unit unit) {
    const auto& u = info(unit);
    if (u.dimension != q.dimension) {
        throw UsageError("cannot express " + std::string(si_symbol(q.dimension)) + " quantity in " +
                         std::string(u.symbol));
    }
    return u.offset == 0.0 ? q.value / u.scale : (q.value - u.offset) / u.scale;
}

Quantity parse_quantity(std::string_view text) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
        throw UsageError("expected a number with unit, got '" + std::string(text) + "'");
    }
    // from_chars happily eats "2e20" out of "2e20cm-3"; a dangling exponent
    // marker such as "5e" followed by a unit is not produced by it.
    std::string_view tag(ptr, static_cast<std::size_t>(last - ptr));
    while (!tag.empty() && tag.front() == ' ') tag.remove_prefix(1);
    if (tag.empty()) {
        throw UsageError("missing unit suffix in '" + std::string(text) + "'");
    }
    return to_si(value, parse_unit(tag));
}

double parse_si(std::string_view text, Dimension expected) {
    const Quantity q = parse_quantity(text);
    if (q.dimension != expected) {
        throw UsageError("'" + std::string(text) + "' has the wrong dimension, expected " +
                         std::string(si_symbol(expected)));
    }
    return q.value;
}

}  // namespace h2plan::units
