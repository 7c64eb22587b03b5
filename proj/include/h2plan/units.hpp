#pragma once

/**
 * @file units.hpp
 * @brief Physical constants and SI normalization of user-facing quantities.
 *
 * Every model in the library works in SI. Non-SI units (bar, degrees Celsius,
 * cm^2/s, cm^-3, ...) only appear when values enter or leave the program.
 */

#include <string>
#include <string_view>

namespace h2plan::units {

struct PhysicalConstants {
    double boltzmann;          ///< k [J/K]
    double planck;             ///< h [J s]
    double avogadro;           ///< N_A [1/mol]
    double atomic_mass_unit;   ///< u [kg]
    double h2_molecular_mass;  ///< m(H2) [kg], molecular hydrogen

    /// Molar gas constant R = N_A k [J/(mol K)].
    [[nodiscard]] constexpr double gas_constant() const noexcept { return avogadro * boltzmann; }
};

/// Exact SI defining constants (2019) plus the CODATA 2018 atomic mass unit.
/// m(H2) = 2 x 1.00794 u = 2.01588 u.
inline constexpr PhysicalConstants kConstants{
    1.380649e-23,
    6.62607015e-34,
    6.02214076e23,
    1.66053906660e-27,
    2.01588 * 1.66053906660e-27,
};

[[nodiscard]] constexpr const PhysicalConstants& constants() noexcept { return kConstants; }

/// Room temperature used for defaults, 20 degC.
inline constexpr double kRoomTemperature = 293.15;
inline constexpr double kCelsiusOffset = 273.15;

enum class Dimension {
    pressure,       // Pa
    temperature,    // K
    length,         // m
    time,           // s
    diffusivity,    // m^2/s
    concentration,  // 1/m^3
    energy,         // J
    power,          // W
    molar_energy,   // J/mol
};

enum class Unit {
    bar,
    pascal,
    celsius,
    kelvin,
    metre,
    centimetre,
    millimetre,
    micrometre,
    nanometre,
    second,
    minute,
    hour,
    day,
    watt,
    milliwatt,
    joule,
    kilojoule,
    m2_per_s,
    cm2_per_s,
    per_m3,
    per_cm3,
    j_per_mol,
    kj_per_mol,
};

struct Quantity {
    double value;
    Dimension dimension;
};

[[nodiscard]] Dimension dimension_of(Unit unit) noexcept;
[[nodiscard]] std::string_view symbol(Unit unit) noexcept;
[[nodiscard]] std::string_view si_symbol(Dimension dim) noexcept;

/// Parses a unit tag such as "bar", "C", "degC", "um", "cm2/s", "kJ/mol", "cm-3".
/// Throws UsageError on anything else.
[[nodiscard]] Unit parse_unit(std::string_view tag);

/// Converts a value in `unit` to SI. Temperatures must end up above 0 K and
/// pressures must be non-negative, otherwise DomainError.
[[nodiscard]] Quantity to_si(double value, Unit unit);
[[nodiscard]] Quantity to_si(double value, std::string_view unit_tag);

/// Inverse of to_si; the quantity's dimension must match the unit.
[[nodiscard]] double from_si(const Quantity& q, Unit unit);

/// Splits "160bar", "2e20cm-3", "20C" into number and unit and converts to SI.
/// A bare number without a unit suffix is a UsageError.
[[nodiscard]] Quantity parse_quantity(std::string_view text);

/// Same as parse_quantity but also checks the dimension.
[[nodiscard]] double parse_si(std::string_view text, Dimension expected);

}  // namespace h2plan::units
