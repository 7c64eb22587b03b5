#include "h2plan/fiber.hpp"

#include <cmath>
#include <string>

#include "h2plan/error.hpp"

namespace h2plan {

FiberSpec lma_pm_10() {
    FiberSpec f;
    f.name = "LMA-PM-10";
    f.cladding_radius = 115e-6;
    f.pitch = 6e-6;
    f.hole_diameter = 3e-6;
    f.mode_field_diameter = 10e-6;
    f.endcap_thickness_min = 50e-6;
    f.endcap_thickness_max = 100e-6;
    f.open_hole_radius = 5e-6;
    return f;
}

void validate(const FiberSpec& f) {
    const auto fail = [&](const std::string& why) { throw ConfigError("fiber '" + f.name + "': " + why); };
    if (!(f.cladding_radius > 0.0)) fail("cladding radius must be positive");
    if (!(f.hole_diameter > 0.0 && f.hole_diameter < f.pitch && f.pitch < f.cladding_radius)) {
        fail("requires 0 < hole diameter < pitch < cladding radius");
    }
    if (!(f.endcap_thickness_min > 0.0) || f.endcap_thickness_min > f.endcap_thickness_max) {
        fail("requires 0 < endcap_min <= endcap_max");
    }
    if (!(f.open_hole_radius > 0.0) || f.open_hole_radius > f.cladding_radius) {
        fail("open-hole radius must lie in (0, R0]");
    }
    if (!(f.mode_field_diameter >= 0.0)) fail("mode field diameter must be non-negative");
}

double effective_radius(const FiberSpec& fiber, GeometryCase geometry) {
    switch (geometry) {
        case GeometryCase::open_holes: return fiber.open_hole_radius;
        case GeometryCase::solid: return fiber.cladding_radius;
        case GeometryCase::endcap_limited: return fiber.endcap_thickness_min;
    }
    return fiber.cladding_radius;
}

std::string_view to_string(GeometryCase geometry) noexcept {
    switch (geometry) {
        case GeometryCase::open_holes: return "open-holes";
        case GeometryCase::solid: return "solid";
        case GeometryCase::endcap_limited: return "endcap-limited";
    }
    return "solid";
}

GeometryCase parse_geometry_case(std::string_view text) {
    if (text == "open" || text == "open-holes" || text == "openholes") return GeometryCase::open_holes;
    if (text == "solid") return GeometryCase::solid;
    if (text == "endcap" || text == "endcap-limited" || text == "endcaplimited") return GeometryCase::endcap_limited;
    throw UsageError("unknown geometry case '" + std::string(text) + "' (open, solid, endcap)");
}

std::string_view to_string(Direction direction) noexcept {
    return direction == Direction::in_diffusion ? "in" : "out";
}

Direction parse_direction(std::string_view text) {
    if (text == "in" || text == "in-diffusion") return Direction::in_diffusion;
    if (text == "out" || text == "out-diffusion") return Direction::out_diffusion;
    throw UsageError("unknown direction '" + std::string(text) + "' (in, out)");
}

InitialState initial_state_for(Direction direction) noexcept {
    return direction == Direction::in_diffusion ? InitialState::empty : InitialState::saturated;
}

void validate(const GasConditions& conditions) {
    if (!(conditions.temperature > 0.0) || !std::isfinite(conditions.temperature)) {
        throw DomainError("temperature must be positive");
    }
    if (!(conditions.pressure >= 0.0) || !std::isfinite(conditions.pressure)) {
        throw DomainError("pressure must be non-negative");
    }
}

void DiffusionScenario::validate() const {
    h2plan::validate(fiber);
    h2plan::validate(conditions);
    if (initial_state != initial_state_for(direction)) {
        throw DomainError("in-diffusion starts empty and out-diffusion starts saturated");
    }
}

}  // namespace h2plan
