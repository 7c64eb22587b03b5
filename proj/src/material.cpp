#include "h2plan/material.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "h2plan/error.hpp"
#include "h2plan/units.hpp"

namespace h2plan::material {

namespace {

void require_temperature(double temperature) {
    if (!(temperature > 0.0) || !std::isfinite(temperature)) {
        throw DomainError("temperature must be positive and finite, got " + std::to_string(temperature) + " K");
    }
}

}  // namespace

DiffusivityModel default_diffusivity() noexcept { return {2.83e-4 * 1e-4, 40.19e3}; }

SolubilityParams default_solubility() noexcept { return {2.22e22 * 1e6, 585.508, -12.727872e3}; }

MaterialModel default_material() { return {"fused-silica", default_diffusivity(), default_solubility()}; }

void validate(const DiffusivityModel& model) {
    if (!(model.prefactor > 0.0) || !(model.activation_energy > 0.0)) {
        throw ConfigError("diffusivity model needs D0 > 0 and Ea > 0");
    }
}

void validate(const SolubilityParams& params) {
    if (!(params.lattice_site_density > 0.0) || !(params.characteristic_temperature > 0.0) ||
        !std::isfinite(params.binding_energy)) {
        throw ConfigError("solubility parameters need N_s > 0, theta_v > 0 and finite E0");
    }
}

double diffusivity(double temperature, const DiffusivityModel& model) {
    require_temperature(temperature);
    const double rt = units::constants().gas_constant() * temperature;
    return model.prefactor * std::exp(-model.activation_energy / rt);
}

double diffusivity_log_slope(double temperature, const DiffusivityModel& model) {
    require_temperature(temperature);
    return model.activation_energy / (units::constants().gas_constant() * temperature * temperature);
}

double vibrational_factor(double temperature, double characteristic_temperature) {
    require_temperature(temperature);
    const double a = characteristic_temperature / temperature;
    const double single = std::exp(-0.5 * a) / -std::expm1(-a);
    return single * single * single;
}

double solubility(double pressure, double temperature, const SolubilityParams& params) {
    require_temperature(temperature);
    if (!(pressure >= 0.0) || !std::isfinite(pressure)) {
        throw DomainError("pressure must be non-negative and finite");
    }
    const auto& c = units::constants();
    const double kt = c.boltzmann * temperature;
    const double de_broglie = c.planck * c.planck / (2.0 * std::numbers::pi * c.h2_molecular_mass * kt);
    const double volume = de_broglie * std::sqrt(de_broglie);
    const double occupancy = params.lattice_site_density / kt;
    const double binding = std::exp(-params.binding_energy / (c.gas_constant() * temperature));
    return pressure * volume * occupancy * vibrational_factor(temperature, params.characteristic_temperature) *
           binding;
}

double absolute_concentration(double relative, double pressure, double temperature, const SolubilityParams& params) {
    if (!(relative >= 0.0 && relative <= 1.0)) {
        throw DomainError("relative concentration must lie in [0, 1]");
    }
    return relative * solubility(pressure, temperature, params);
}

}  // namespace h2plan::material
