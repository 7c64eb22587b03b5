#pragma once

/**
 * @file fd_oracle.hpp
 * @brief Finite-difference solver for the dimensionless radial diffusion problem.
 *
 *     dC/dtheta = d2C/dr2 + (1/r) dC/dr,   0 <= r <= 1,
 *
 * with dC/dr = 0 on the axis (where the operator becomes 2 d2C/dr2) and a
 * Dirichlet surface value. Crank-Nicolson in time on a quadratically graded
 * time mesh, which keeps the first steps small enough to damp the
 * discontinuity between the initial profile and the boundary value.
 * Independent of the series solution; used to validate it.
 */

#include <cstddef>

#include "h2plan/fiber.hpp"
#include "h2plan/planner.hpp"

namespace h2plan::fd {

struct FdConfig {
    std::size_t radial_points = 512;  ///< number of radial intervals M (M + 1 nodes)
    std::size_t time_steps = 2048;
    double theta_end = 1.0;
    double grading = 2.0;             ///< theta_k = theta_end (k / steps)^grading

    /// Throws UsageError when M < 16, steps < 16, theta_end <= 0 or grading < 1.
    void validate() const;
};

/// Solves the problem and returns the field on every node and every time level.
/// times/thetas both hold the dimensionless time levels.
[[nodiscard]] planner::ConcentrationField fd_solve(const FdConfig& config, Direction direction);

/// Thomas algorithm; NumericError on a zero pivot.
void solve_tridiagonal(const double* lower, const double* diag, const double* upper, double* rhs, double* scratch,
                       std::size_t n);

struct Comparison {
    double max_abs_error;
    double r_frac;   ///< location of the maximum
    double theta;
    std::size_t samples;
};

struct CompareConfig {
    FdConfig fd;
    double theta_min = 1e-3;
    double r_max = 0.9;
};

/// Max |series - FD| over all radial nodes r <= r_max and time levels theta >= theta_min.
[[nodiscard]] Comparison compare_with_series(const CompareConfig& config,
                                             Direction direction = Direction::out_diffusion);

/// r-weighted discrete amount of hydrogen (trapezoid in r dr) per time level.
[[nodiscard]] std::vector<double> discrete_mass(const planner::ConcentrationField& field);

}  // namespace h2plan::fd
