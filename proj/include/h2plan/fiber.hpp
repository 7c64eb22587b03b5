#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace h2plan {

/// Geometry of a (photonic crystal) fiber. All lengths in metres.
struct FiberSpec {
    std::string name;
    double cladding_radius = 0.0;      ///< R0
    double pitch = 0.0;                ///< hole lattice pitch
    double hole_diameter = 0.0;
    double mode_field_diameter = 0.0;
    double endcap_thickness_min = 0.0;
    double endcap_thickness_max = 0.0;
    double open_hole_radius = 0.0;     ///< radius of the first cladding ring, governs open-hole transport
    std::optional<std::string> index_table;  ///< optional path to wavelength_nm,effective_NA data
};

/// LMA-PM-10: R0 = 115 um, pitch 6 um, holes 3 um, MFD 10 um, endcaps 50-100 um,
/// first cladding ring diameter 10 um.
[[nodiscard]] FiberSpec lma_pm_10();

/// Throws ConfigError when 0 < d < pitch < R0 or the endcap ordering is violated.
void validate(const FiberSpec& fiber);

enum class GeometryCase {
    open_holes,      ///< hydrogen escapes through open holes; transport limited to the first ring
    solid,           ///< holes ignored; full cladding radius (conservative for loading)
    endcap_limited,  ///< cylinder of radius equal to the thinnest endcap (conservative for storage)
};

[[nodiscard]] double effective_radius(const FiberSpec& fiber, GeometryCase geometry);
[[nodiscard]] std::string_view to_string(GeometryCase geometry) noexcept;
/// Accepts "open", "open-holes", "solid", "endcap", "endcap-limited".
[[nodiscard]] GeometryCase parse_geometry_case(std::string_view text);

enum class Direction { in_diffusion, out_diffusion };
enum class InitialState { empty, saturated };

[[nodiscard]] std::string_view to_string(Direction direction) noexcept;
/// Accepts "in" / "out" (and the long forms).
[[nodiscard]] Direction parse_direction(std::string_view text);
[[nodiscard]] InitialState initial_state_for(Direction direction) noexcept;

struct GasConditions {
    double pressure = 0.0;     ///< [Pa]
    double temperature = 0.0;  ///< [K]
};

void validate(const GasConditions& conditions);

/// One planning unit: a fiber under given conditions, in a given geometry case,
/// loading from empty or depleting from saturation.
struct DiffusionScenario {
    FiberSpec fiber;
    GeometryCase geometry = GeometryCase::solid;
    GasConditions conditions;
    Direction direction = Direction::in_diffusion;
    InitialState initial_state = InitialState::empty;

    /// In-diffusion must start empty and out-diffusion saturated.
    void validate() const;
    [[nodiscard]] double effective_radius() const { return h2plan::effective_radius(fiber, geometry); }
};

}  // namespace h2plan
