#pragma once

/**
 * @file material.hpp
 * @brief Hydrogen transport and solubility in fused silica.
 *
 * Diffusivity follows an Arrhenius law D(T) = D0 exp(-Ea / (N_A k T)).
 * Solubility is the statistical-mechanics expression for H2 trapped at
 * interstitial sites: a thermal de Broglie volume, site occupancy N_s / kT,
 * a three-dimensional vibrational partition factor and a binding Boltzmann
 * factor.
 */

#include <string>

namespace h2plan::material {

struct DiffusivityModel {
    double prefactor;          ///< D0 [m^2/s]
    double activation_energy;  ///< Ea [J/mol]
};

struct SolubilityParams {
    double lattice_site_density;        ///< N_s [1/m^3]
    double characteristic_temperature;  ///< theta_v [K]
    double binding_energy;              ///< E0 [J/mol]; negative for silica
};

struct MaterialModel {
    std::string name;
    DiffusivityModel diffusivity;
    SolubilityParams solubility;
};

/// D0 = 2.83e-4 cm^2/s, Ea = 40.19 kJ/mol.
[[nodiscard]] DiffusivityModel default_diffusivity() noexcept;
/// N_s = 2.22e22 cm^-3, theta_v = 585.508 K, E0 = -12.727872 kJ/mol.
[[nodiscard]] SolubilityParams default_solubility() noexcept;
/// Preset "fused-silica" combining the two above.
[[nodiscard]] MaterialModel default_material();

void validate(const DiffusivityModel& model);
void validate(const SolubilityParams& params);

/// D(T) [m^2/s]. DomainError for T <= 0.
[[nodiscard]] double diffusivity(double temperature, const DiffusivityModel& model = default_diffusivity());

/// d ln D / dT = Ea / (R T^2).
[[nodiscard]] double diffusivity_log_slope(double temperature, const DiffusivityModel& model = default_diffusivity());

/// Vibrational factor [exp(-theta/2T) / (1 - exp(-theta/T))]^3, cancellation-free at large T.
[[nodiscard]] double vibrational_factor(double temperature, double characteristic_temperature);

/// S(p, T) [1/m^3], linear in p. DomainError for T <= 0 or p < 0.
[[nodiscard]] double solubility(double pressure, double temperature,
                                const SolubilityParams& params = default_solubility());

/// C_rel * S(p, T). DomainError for C_rel outside [0, 1].
[[nodiscard]] double absolute_concentration(double relative, double pressure, double temperature,
                                            const SolubilityParams& params = default_solubility());

}  // namespace h2plan::material
