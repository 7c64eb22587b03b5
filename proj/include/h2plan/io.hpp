#pragma once

/**
 * @file io.hpp
 * @brief Preset files, CSV ingestion and CSV emission.
 *
 * All CSV files are comma separated with a mandatory header line. Readers
 * accept LF or CRLF line endings; writers emit LF.
 */

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "h2plan/fiber.hpp"
#include "h2plan/guidance.hpp"
#include "h2plan/material.hpp"
#include "h2plan/planner.hpp"

namespace h2plan::io {

/// printf-style %.Ng formatting, the single place numbers are rendered.
[[nodiscard]] std::string format_number(double value, int significant_digits);

/// Strict decimal parse of a whole field; DataError naming `context` otherwise.
[[nodiscard]] double parse_number(std::string_view text, std::string_view context);

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

struct PresetLibrary {
    std::map<std::string, FiberSpec> fibers;
    std::map<std::string, material::MaterialModel> materials;
    std::map<std::string, guidance::BendModelParams> bends;

    [[nodiscard]] const FiberSpec& fiber(const std::string& name) const;
    [[nodiscard]] const material::MaterialModel& material(const std::string& name) const;
    [[nodiscard]] const guidance::BendModelParams& bend(const std::string& name) const;
};

/// Parses sectioned key=value text: "[fiber NAME]", "[material NAME]",
/// "[bend NAME]". Unknown sections or keys are ConfigErrors naming the line.
/// Material sections start from the built-in defaults and override keys.
[[nodiscard]] PresetLibrary parse_presets(std::string_view text, std::string_view source = "<presets>");
[[nodiscard]] PresetLibrary load_presets(const std::string& path);

/// Text of the presets compiled into the library (identical to data/presets.ini).
[[nodiscard]] std::string_view builtin_preset_text() noexcept;
[[nodiscard]] const PresetLibrary& builtin_presets();

/// Environment variable that overrides the preset file location.
inline constexpr const char* kPresetEnvVar = "H2PLAN_PRESETS";

/// Explicit path wins, then $H2PLAN_PRESETS, then the built-in presets.
[[nodiscard]] PresetLibrary resolve_presets(const std::string& explicit_path);

// ---------------------------------------------------------------------------
// CSV inputs
// ---------------------------------------------------------------------------

struct PowerSample {
    double time;   ///< [s]
    double power;  ///< [W]
};

struct PowerLog {
    std::vector<PowerSample> rows;
    /// At least two rows, strictly increasing times, non-negative power.
    void validate() const;
};

/// Header time_s,power_mW.
[[nodiscard]] PowerLog read_power_log(std::istream& in);
/// Header duration_s,temperature_C.
[[nodiscard]] planner::TemperatureSchedule read_schedule(std::istream& in);
/// Header wavelength_nm,effective_NA.
[[nodiscard]] guidance::IndexData read_index_table(std::istream& in);

[[nodiscard]] PowerLog read_power_log_file(const std::string& path);
[[nodiscard]] planner::TemperatureSchedule read_schedule_file(const std::string& path);
[[nodiscard]] guidance::IndexData read_index_table_file(const std::string& path);

/// Cumulative optical energy, trapezoidal integral of P dt [J].
[[nodiscard]] double integrate_energy(const PowerLog& log);

// ---------------------------------------------------------------------------
// Contour grid
// ---------------------------------------------------------------------------

struct ContourCell {
    double temperature;  ///< [K]
    double time;         ///< [s]
    double concentration;
};

/// Relative concentration at r_frac for every (T, t), T outer and t inner.
[[nodiscard]] std::vector<ContourCell> emit_contour(const std::vector<double>& temperatures,
                                                    const std::vector<double>& times, const FiberSpec& fiber,
                                                    GeometryCase geometry, double r_frac = 0.0,
                                                    Direction direction = Direction::in_diffusion,
                                                    const material::DiffusivityModel& model =
                                                        material::default_diffusivity());

inline constexpr std::string_view kContourHeader = "temperature_K,time_s,concentration";

/// Writes the header plus one row per cell at 9 significant digits.
void write_contour_csv(std::ostream& out, const std::vector<ContourCell>& cells);
[[nodiscard]] std::vector<ContourCell> read_contour_csv(std::istream& in);

}  // namespace h2plan::io
