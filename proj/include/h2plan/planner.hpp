#pragma once

/**
 * @file planner.hpp
 * @brief Loading, storage and curing schedules built on the radial diffusion model.
 */

#include <array>
#include <cstddef>
#include <vector>

#include "h2plan/fiber.hpp"
#include "h2plan/material.hpp"

namespace h2plan::planner {

struct CaseTime {
    GeometryCase geometry;
    double effective_radius;  ///< [m]
    double time;              ///< [s]
};

/// Result of the four-step loading procedure.
struct LoadingPlan {
    double target_concentration;  ///< step 1: n_target [1/m^3]
    double solubility;            ///< S(p, T) [1/m^3]
    double fraction;              ///< step 2: x = n_target / S
    double theta;                 ///< step 3: dimensionless time reaching x on the axis
    double diffusivity;           ///< D(T) [m^2/s]
    double reference_radius;      ///< radius the step-3 time refers to (cladding radius)
    double reference_time;        ///< step 3: t at the reference radius [s]
    std::array<CaseTime, 3> cases;  ///< step 4: open holes, solid, endcap limited
    double center_concentration;  ///< absolute concentration on the axis at completion [1/m^3]
};

/// InfeasibleError if n_target >= S(p, T), DomainError if n_target <= 0.
[[nodiscard]] LoadingPlan loading_plan(double target_concentration, double pressure, double temperature,
                                       const FiberSpec& fiber,
                                       const material::MaterialModel& material = material::default_material());

/// In-diffusion time for the axis to reach `fraction` of saturation.
[[nodiscard]] double loading_time(double fraction, double temperature, double radius,
                                  const material::DiffusivityModel& model = material::default_diffusivity());

/// Time until the axis of a saturated fiber decays to `remaining_fraction`.
[[nodiscard]] double storage_time(double remaining_fraction, double temperature, const FiberSpec& fiber,
                                  GeometryCase geometry,
                                  const material::DiffusivityModel& model = material::default_diffusivity());

struct ScheduleSegment {
    double duration;     ///< [s]
    double temperature;  ///< [K]
};

struct TemperatureSchedule {
    std::vector<ScheduleSegment> segments;
    void validate() const;
    [[nodiscard]] double total_duration() const noexcept;
};

/// Relative concentration sampled on a (time x radius) grid, row-major by time.
struct ConcentrationField {
    std::vector<double> r_fractions;
    std::vector<double> times;   ///< [s] (or theta for dimensionless fields)
    std::vector<double> thetas;  ///< accumulated theta per time row
    std::vector<double> values;  ///< times.size() x r_fractions.size()

    [[nodiscard]] double at(std::size_t time_index, std::size_t r_index) const {
        return values[time_index * r_fractions.size() + r_index];
    }
};

/// Accumulated theta after each segment boundary, starting with 0.
[[nodiscard]] std::vector<double> accumulated_theta(const TemperatureSchedule& schedule, double radius,
                                                    const material::DiffusivityModel& model);

/// Concentration at every segment boundary of a piecewise-constant
/// temperature history. D only enters through the accumulated
/// theta = sum D(T_i) dt_i / R^2, so a constant-temperature schedule
/// reproduces the direct evaluation exactly.
[[nodiscard]] ConcentrationField schedule_concentration(
    const TemperatureSchedule& schedule, const FiberSpec& fiber, GeometryCase geometry,
    const std::vector<double>& r_fractions, Direction direction,
    const material::DiffusivityModel& model = material::default_diffusivity());

/// Search grid for optimize_conditions.
struct OptimizerGrid {
    std::size_t pressure_points = 25;
    std::size_t temperature_points = 25;
    std::size_t refinement_passes = 2;
    double pressure_min = 0.0;       ///< 0 means p_max / pressure_points
    double temperature_min = 273.15; ///< [K]
};

struct OptimumConditions {
    double pressure;
    double temperature;
    double time;
    double fraction;
    std::size_t evaluations;
};

/// Loading time at (p, T) for a target, or +inf when infeasible (x >= 1).
[[nodiscard]] double loading_time_at(double target_concentration, double pressure, double temperature,
                                     double radius, const material::MaterialModel& material);

/// Minimizes the loading time over a (p, T) grid on [p_min, p_max] x [T_min, T_max]
/// with local refinement around the best node. InfeasibleError if no node is feasible.
[[nodiscard]] OptimumConditions optimize_conditions(
    double target_concentration, double pressure_max, double temperature_max, const FiberSpec& fiber,
    GeometryCase geometry, const OptimizerGrid& grid = {},
    const material::MaterialModel& material = material::default_material());

}  // namespace h2plan::planner
