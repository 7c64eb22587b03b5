#pragma once

/**
 * @file diffusion.hpp
 * @brief Radial diffusion of hydrogen in an infinitely long silica cylinder.
 *
 * Everything is expressed in the similarity variables r_frac = r / R_eff and
 * theta = D t / R_eff^2. For a saturated cylinder whose surface is held at
 * zero concentration the relative concentration is the Fourier-Bessel series
 *
 *     C_out(r, theta) = 2 sum_n J0(mu_n r) / (mu_n J1(mu_n)) exp(-mu_n^2 theta),
 *
 * mu_n being the zeros of J0. Loading an empty cylinder is the complement,
 * C_in = 1 - C_out. Derivation notes: separating C = R(r) T(t) gives Bessel's
 * equation for R; the Y0 branch is dropped because C stays finite on the
 * axis, the surface condition quantizes the separation constant to mu_n / R,
 * and projecting the unit initial profile on J0(mu_n r) gives the weights
 * 2 / (mu_n J1(mu_n)).
 */

#include <cstddef>

#include "h2plan/fiber.hpp"

namespace h2plan::diffusion {

inline constexpr double kSeriesTolerance = 1e-12;
inline constexpr std::size_t kMaxTerms = 1'000'000;

/// Bracket used when inverting C(theta).
inline constexpr double kThetaMin = 1e-9;
inline constexpr double kThetaMax = 50.0;
/// Accuracy of the inverted concentration.
inline constexpr double kInversionTolerance = 1e-9;

/// theta = D t / R^2. D and R must be positive, t non-negative.
[[nodiscard]] double theta(double diffusivity, double time, double radius);

struct SeriesEvaluation {
    double value;        ///< clamped to [0, 1]
    double raw;          ///< partial sum before clamping
    double tail_bound;   ///< bound on the neglected terms
    std::size_t terms;   ///< number of terms summed
    [[nodiscard]] double clamp_magnitude() const noexcept { return value > raw ? value - raw : raw - value; }
};

/// Full record of one out-diffusion series evaluation. theta == 0 returns the
/// initial condition, r_frac == 1 returns the boundary value 0 for theta > 0.
/// Throws ConvergenceError (with the achievable tail bound) if more than
/// kMaxTerms terms would be needed.
[[nodiscard]] SeriesEvaluation evaluate_out_series(double r_frac, double theta);

[[nodiscard]] double c_out(double r_frac, double theta);
/// Exactly 1 - c_out(r_frac, theta).
[[nodiscard]] double c_in(double r_frac, double theta);
[[nodiscard]] double concentration(double r_frac, double theta, Direction direction);

/// Number of terms the adaptive truncation will need for this theta.
[[nodiscard]] std::size_t required_terms(double theta);

/// theta at which C(r_frac, theta) equals target (0 < target < 1, r_frac in [0, 0.9]).
[[nodiscard]] double invert_time(double target, double r_frac, Direction direction);

/// t (R_to / R_from)^2, converting a diffusion time between radii.
[[nodiscard]] double scale_time(double time, double radius_from, double radius_to);

/// Physical time for a dimensionless theta: theta R^2 / D.
[[nodiscard]] double time_from_theta(double theta, double diffusivity, double radius);

}  // namespace h2plan::diffusion
