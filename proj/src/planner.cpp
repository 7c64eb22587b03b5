#include "h2plan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "h2plan/diffusion.hpp"
#include "h2plan/error.hpp"

namespace h2plan::planner {

LoadingPlan loading_plan(double target_concentration, double pressure, double temperature, const FiberSpec& fiber,
                         const material::MaterialModel& material) {
    validate(fiber);
    validate(GasConditions{pressure, temperature});
    if (!(target_concentration > 0.0)) {
        throw DomainError("target concentration must be positive");
    }
    LoadingPlan plan{};
    plan.target_concentration = target_concentration;
    plan.solubility = material::solubility(pressure, temperature, material.solubility);
    plan.fraction = target_concentration / plan.solubility;
    if (!(plan.fraction < 1.0)) {
        std::ostringstream msg;
        msg << "target " << target_concentration * 1e-6 << " cm-3 is not reachable: S(p,T) = "
            << plan.solubility * 1e-6 << " cm-3 is the maximum achievable concentration";
        throw InfeasibleError(msg.str());
    }
    plan.theta = diffusion::invert_time(plan.fraction, 0.0, Direction::in_diffusion);
    plan.diffusivity = material::diffusivity(temperature, material.diffusivity);
    plan.reference_radius = fiber.cladding_radius;
    plan.reference_time = diffusion::time_from_theta(plan.theta, plan.diffusivity, plan.reference_radius);
    const std::array geometries{GeometryCase::open_holes, GeometryCase::solid, GeometryCase::endcap_limited};
    for (std::size_t i = 0; i < geometries.size(); ++i) {
        const double radius = effective_radius(fiber, geometries[i]);
        plan.cases[i] = {geometries[i], radius,
                         diffusion::scale_time(plan.reference_time, plan.reference_radius, radius)};
    }
    plan.center_concentration = material::absolute_concentration(plan.fraction, pressure, temperature,
                                                                  material.solubility);
    return plan;
}

double loading_time(double fraction, double temperature, double radius, const material::DiffusivityModel& model) {
    const double th = diffusion::invert_time(fraction, 0.0, Direction::in_diffusion);
    return diffusion::time_from_theta(th, material::diffusivity(temperature, model), radius);
}

double storage_time(double remaining_fraction, double temperature, const FiberSpec& fiber, GeometryCase geometry,
                    const material::DiffusivityModel& model) {
    validate(fiber);
    const double th = diffusion::invert_time(remaining_fraction, 0.0, Direction::out_diffusion);
    return diffusion::time_from_theta(th, material::diffusivity(temperature, model),
                                      effective_radius(fiber, geometry));
}

void TemperatureSchedule::validate() const {
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const auto& s = segments[i];
        if (!(s.duration > 0.0) || !std::isfinite(s.duration)) {
            throw DataError("schedule segment " + std::to_string(i + 1) + ": duration must be positive");
        }
        if (!(s.temperature > 0.0) || !std::isfinite(s.temperature)) {
            throw DataError("schedule segment " + std::to_string(i + 1) + ": temperature must be above 0 K");
        }
    }
}

double TemperatureSchedule::total_duration() const noexcept {
    double total = 0.0;
    for (const auto& s : segments) total += s.duration;
    return total;
}

std::vector<double> accumulated_theta(const TemperatureSchedule& schedule, double radius,
                                      const material::DiffusivityModel& model) {
    schedule.validate();
    std::vector<double> thetas{0.0};
    thetas.reserve(schedule.segments.size() + 1);
    for (const auto& s : schedule.segments) {
        thetas.push_back(thetas.back() + diffusion::theta(material::diffusivity(s.temperature, model), s.duration, radius));
    }
    return thetas;
}

ConcentrationField schedule_concentration(const TemperatureSchedule& schedule, const FiberSpec& fiber,
                                          GeometryCase geometry, const std::vector<double>& r_fractions,
                                          Direction direction, const material::DiffusivityModel& model) {
    validate(fiber);
    ConcentrationField field;
    field.r_fractions = r_fractions;
    field.thetas = accumulated_theta(schedule, effective_radius(fiber, geometry), model);
    field.times.push_back(0.0);
    for (const auto& s : schedule.segments) field.times.push_back(field.times.back() + s.duration);
    field.values.reserve(field.thetas.size() * r_fractions.size());
    for (const double th : field.thetas) {
        for (const double r : r_fractions) {
            field.values.push_back(diffusion::concentration(r, th, direction));
        }
    }
    return field;
}

double loading_time_at(double target_concentration, double pressure, double temperature, double radius,
                       const material::MaterialModel& material) {
    const double s = material::solubility(pressure, temperature, material.solubility);
    const double x = target_concentration / s;
    if (!(x < 1.0)) return std::numeric_limits<double>::infinity();
    return loading_time(x, temperature, radius, material.diffusivity);
}

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = hi;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return v;
}

}  // namespace

OptimumConditions optimize_conditions(double target_concentration, double pressure_max, double temperature_max,
                                      const FiberSpec& fiber, GeometryCase geometry, const OptimizerGrid& grid,
                                      const material::MaterialModel& material) {
    validate(fiber);
    if (!(target_concentration > 0.0)) throw DomainError("target concentration must be positive");
    if (!(pressure_max > 0.0)) throw DomainError("maximum pressure must be positive");
    if (grid.pressure_points < 1 || grid.temperature_points < 1) throw UsageError("optimizer grid must be non-empty");
    const double p_min = grid.pressure_min > 0.0 ? grid.pressure_min
                                                 : pressure_max / static_cast<double>(grid.pressure_points);
    const double t_min = grid.temperature_min;
    if (!(t_min > 0.0) || !(temperature_max >= t_min) || !(pressure_max >= p_min)) {
        throw DomainError("optimizer bounds must satisfy 0 < T_min <= T_max and 0 < p_min <= p_max");
    }
    const double radius = effective_radius(fiber, geometry);

    OptimumConditions best{0.0, 0.0, std::numeric_limits<double>::infinity(), 0.0, 0};
    double p_lo = p_min;
    double p_hi = pressure_max;
    double t_lo = t_min;
    double t_hi = temperature_max;
    for (std::size_t pass = 0; pass <= grid.refinement_passes; ++pass) {
        const auto ps = linspace(p_lo, p_hi, grid.pressure_points);
        const auto ts = linspace(t_lo, t_hi, grid.temperature_points);
        for (const double p : ps) {
            for (const double temp : ts) {
                const double t = loading_time_at(target_concentration, p, temp, radius, material);
                ++best.evaluations;
                if (t < best.time) {
                    best.time = t;
                    best.pressure = p;
                    best.temperature = temp;
                }
            }
        }
        if (!std::isfinite(best.time)) {
            std::ostringstream msg;
            msg << "target " << target_concentration * 1e-6 << " cm-3 exceeds the solubility at every grid point"
                << " (S(p_max, T_max) = " << material::solubility(pressure_max, temperature_max, material.solubility) * 1e-6
                << " cm-3)";
            throw InfeasibleError(msg.str());
        }
        // Zoom onto the cells adjacent to the best node so far.
        const double dp = ps.size() > 1 ? ps[1] - ps[0] : 0.0;
        const double dt = ts.size() > 1 ? ts[1] - ts[0] : 0.0;
        p_lo = std::max(p_min, best.pressure - dp);
        p_hi = std::min(pressure_max, best.pressure + dp);
        t_lo = std::max(t_min, best.temperature - dt);
        t_hi = std::min(temperature_max, best.temperature + dt);
    }
    best.fraction = target_concentration / material::solubility(best.pressure, best.temperature, material.solubility);
    return best;
}

}  // namespace h2plan::planner
