#include "h2plan/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "h2plan/diffusion.hpp"
#include "h2plan/error.hpp"
#include "h2plan/units.hpp"

namespace h2plan::io {

namespace detail {
extern const std::string_view kBuiltinPresetText;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
    while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

/// Reads a CSV with the given header; returns numeric rows (1-based data row numbers in errors).
std::vector<std::vector<double>> read_csv(std::istream& in, std::string_view header, std::string_view what) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(std::string(what) + ": empty input, expected header '" + std::string(header) + "'");
    }
    if (trim(line) != header) {
        throw DataError(std::string(what) + ": expected header '" + std::string(header) + "', got '" +
                        std::string(trim(line)) + "'");
    }
    const std::size_t columns = split(header, ',').size();
    std::vector<std::vector<double>> rows;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        const auto fields = split(trim(line), ',');
        const std::string ctx = std::string(what) + " row " + std::to_string(row);
        if (fields.size() != columns) {
            throw DataError(ctx + ": expected " + std::to_string(columns) + " fields, got " +
                            std::to_string(fields.size()));
        }
        std::vector<double> values;
        values.reserve(columns);
        for (const auto f : fields) values.push_back(parse_number(f, ctx));
        rows.push_back(std::move(values));
    }
    return rows;
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return in;
}

}  // namespace

std::string format_number(double value, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

double parse_number(std::string_view text, std::string_view context) {
    text = trim(text);
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty() || !std::isfinite(value)) {
        throw DataError(std::string(context) + ": '" + std::string(text) + "' is not a number");
    }
    return value;
}

// ---------------------------------------------------------------------------

const FiberSpec& PresetLibrary::fiber(const std::string& name) const {
    const auto it = fibers.find(name);
    if (it == fibers.end()) throw UsageError("unknown fiber preset '" + name + "'");
    return it->second;
}

const material::MaterialModel& PresetLibrary::material(const std::string& name) const {
    const auto it = materials.find(name);
    if (it == materials.end()) throw UsageError("unknown material preset '" + name + "'");
    return it->second;
}

const guidance::BendModelParams& PresetLibrary::bend(const std::string& name) const {
    const auto it = bends.find(name);
    if (it == bends.end()) throw UsageError("unknown bend preset '" + name + "'");
    return it->second;
}

PresetLibrary parse_presets(std::string_view text, std::string_view source) {
    enum class Kind { none, fiber, material, bend };
    PresetLibrary lib;
    Kind kind = Kind::none;
    std::string name;
    FiberSpec fiber;
    material::MaterialModel mat;
    guidance::BendModelParams bend;
    std::map<std::string, bool> seen;
    double calib_wavelength = 0.0;
    double calib_radius = 0.0;

    const auto location = [&](std::size_t line_no) {
        return std::string(source) + ":" + std::to_string(line_no) + ": ";
    };

    const auto flush = [&](std::size_t line_no) {
        switch (kind) {
            case Kind::none: break;
            case Kind::fiber: {
                for (const char* required : {"cladding_radius_um", "pitch_um", "hole_diameter_um",
                                             "endcap_thickness_min_um", "endcap_thickness_max_um",
                                             "open_hole_radius_um"}) {
                    if (!seen.count(required)) {
                        throw ConfigError(location(line_no) + "fiber '" + name + "' is missing " + required);
                    }
                }
                fiber.name = name;
                validate(fiber);
                lib.fibers[name] = fiber;
                break;
            }
            case Kind::material:
                mat.name = name;
                material::validate(mat.diffusivity);
                material::validate(mat.solubility);
                lib.materials[name] = mat;
                break;
            case Kind::bend:
                if (seen.count("calibration_wavelength_nm") != seen.count("calibration_radius_cm")) {
                    throw ConfigError(location(line_no) + "bend '" + name +
                                      "' needs both calibration_wavelength_nm and calibration_radius_cm");
                }
                if (seen.count("calibration_wavelength_nm")) {
                    bend.calibration = guidance::BendCalibration{calib_wavelength, calib_radius};
                }
                bend.validate();
                lib.bends[name] = bend;
                break;
        }
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(location(line_no) + "malformed section header");
            flush(line_no);
            const auto inner = trim(line.substr(1, line.size() - 2));
            const auto space = inner.find(' ');
            if (space == std::string_view::npos) {
                throw ConfigError(location(line_no) + "section header needs a kind and a name");
            }
            const auto kind_text = inner.substr(0, space);
            name = std::string(trim(inner.substr(space + 1)));
            seen.clear();
            if (kind_text == "fiber") {
                kind = Kind::fiber;
                fiber = FiberSpec{};
            } else if (kind_text == "material") {
                kind = Kind::material;
                mat = material::default_material();
            } else if (kind_text == "bend") {
                kind = Kind::bend;
                bend = guidance::BendModelParams{};
                bend.calibration.reset();
            } else {
                throw ConfigError(location(line_no) + "unknown section kind '" + std::string(kind_text) + "'");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(location(line_no) + "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value_text = trim(line.substr(eq + 1));
        if (kind == Kind::none) throw ConfigError(location(line_no) + "key outside of any section");
        if (seen.count(key)) throw ConfigError(location(line_no) + "duplicate key '" + key + "'");
        seen[key] = true;

        if (kind == Kind::fiber && key == "index_table") {
            fiber.index_table = std::string(value_text);
            continue;
        }
        double value = 0.0;
        try {
            value = parse_number(value_text, location(line_no) + key);
        } catch (const DataError& e) {
            throw ConfigError(e.what());
        }
        const auto unknown = [&] { throw ConfigError(location(line_no) + "unknown key '" + key + "'"); };
        switch (kind) {
            case Kind::fiber:
                if (key == "cladding_radius_um") fiber.cladding_radius = value * 1e-6;
                else if (key == "pitch_um") fiber.pitch = value * 1e-6;
                else if (key == "hole_diameter_um") fiber.hole_diameter = value * 1e-6;
                else if (key == "mode_field_diameter_um") fiber.mode_field_diameter = value * 1e-6;
                else if (key == "endcap_thickness_min_um") fiber.endcap_thickness_min = value * 1e-6;
                else if (key == "endcap_thickness_max_um") fiber.endcap_thickness_max = value * 1e-6;
                else if (key == "open_hole_radius_um") fiber.open_hole_radius = value * 1e-6;
                else unknown();
                break;
            case Kind::material:
                if (key == "diffusivity_prefactor_cm2_per_s") mat.diffusivity.prefactor = value * 1e-4;
                else if (key == "activation_energy_kJ_per_mol") mat.diffusivity.activation_energy = value * 1e3;
                else if (key == "lattice_site_density_per_cm3") mat.solubility.lattice_site_density = value * 1e6;
                else if (key == "characteristic_temperature_K") mat.solubility.characteristic_temperature = value;
                else if (key == "binding_energy_kJ_per_mol") mat.solubility.binding_energy = value * 1e3;
                else unknown();
                break;
            case Kind::bend:
                if (key == "v_star") bend.v_star = value;
                else if (key == "effective_area_um2") bend.effective_area = value * 1e-12;
                else if (key == "silica_index") bend.silica_index = value;
                else if (key == "reference_pitch_um") bend.reference_pitch = value * 1e-6;
                else if (key == "calibration_wavelength_nm") calib_wavelength = value * 1e-9;
                else if (key == "calibration_radius_cm") calib_radius = value * 1e-2;
                else unknown();
                break;
            case Kind::none: break;
        }
    }
    flush(line_no);
    return lib;
}

PresetLibrary load_presets(const std::string& path) {
    auto in = open_file(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_presets(buf.str(), path);
}

std::string_view builtin_preset_text() noexcept { return detail::kBuiltinPresetText; }

const PresetLibrary& builtin_presets() {
    static const PresetLibrary lib = parse_presets(builtin_preset_text(), "<builtin>");
    return lib;
}

PresetLibrary resolve_presets(const std::string& explicit_path) {
    if (!explicit_path.empty()) return load_presets(explicit_path);
    if (const char* env = std::getenv(kPresetEnvVar); env != nullptr && *env != '\0') {
        return load_presets(env);
    }
    return builtin_presets();
}

// ---------------------------------------------------------------------------

void PowerLog::validate() const {
    if (rows.size() < 2) throw DataError("power log needs at least 2 rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!(rows[i].power >= 0.0)) {
            throw DataError("power log row " + std::to_string(i + 1) + ": negative power");
        }
        if (i > 0 && !(rows[i].time > rows[i - 1].time)) {
            throw DataError("power log row " + std::to_string(i + 1) + ": time is not strictly increasing");
        }
    }
}

PowerLog read_power_log(std::istream& in) {
    PowerLog log;
    for (const auto& r : read_csv(in, "time_s,power_mW", "power log")) {
        log.rows.push_back({r[0], units::to_si(r[1], units::Unit::milliwatt).value});
    }
    log.validate();
    return log;
}

planner::TemperatureSchedule read_schedule(std::istream& in) {
    planner::TemperatureSchedule schedule;
    std::size_t row = 0;
    for (const auto& r : read_csv(in, "duration_s,temperature_C", "temperature schedule")) {
        ++row;
        try {
            schedule.segments.push_back({r[0], units::to_si(r[1], units::Unit::celsius).value});
        } catch (const DomainError& e) {
            throw DataError("temperature schedule row " + std::to_string(row) + ": " + e.what());
        }
    }
    schedule.validate();
    return schedule;
}

guidance::IndexData read_index_table(std::istream& in) {
    std::vector<guidance::IndexSample> samples;
    for (const auto& r : read_csv(in, "wavelength_nm,effective_NA", "index table")) {
        samples.push_back({r[0] * 1e-9, r[1]});
    }
    return guidance::IndexData(std::move(samples));
}

PowerLog read_power_log_file(const std::string& path) {
    auto in = open_file(path);
    return read_power_log(in);
}

planner::TemperatureSchedule read_schedule_file(const std::string& path) {
    auto in = open_file(path);
    return read_schedule(in);
}

guidance::IndexData read_index_table_file(const std::string& path) {
    auto in = open_file(path);
    return read_index_table(in);
}

double integrate_energy(const PowerLog& log) {
    log.validate();
    double energy = 0.0;
    for (std::size_t i = 1; i < log.rows.size(); ++i) {
        const auto& a = log.rows[i - 1];
        const auto& b = log.rows[i];
        energy += 0.5 * (a.power + b.power) * (b.time - a.time);
    }
    return energy;
}

// ---------------------------------------------------------------------------

std::vector<ContourCell> emit_contour(const std::vector<double>& temperatures, const std::vector<double>& times,
                                      const FiberSpec& fiber, GeometryCase geometry, double r_frac,
                                      Direction direction, const material::DiffusivityModel& model) {
    if (temperatures.empty() || times.empty()) throw UsageError("contour needs non-empty temperature and time ranges");
    validate(fiber);
    const double radius = effective_radius(fiber, geometry);
    std::vector<ContourCell> cells;
    cells.reserve(temperatures.size() * times.size());
    std::size_t index = 0;
    for (const double temp : temperatures) {
        for (const double t : times) {
            try {
                const double th = diffusion::theta(material::diffusivity(temp, model), t, radius);
                cells.push_back({temp, t, diffusion::concentration(r_frac, th, direction)});
            } catch (const Error& e) {
                throw Error(e.kind(), "contour cell " + std::to_string(index) + " (T=" + format_number(temp, 9) +
                                          " K, t=" + format_number(t, 9) + " s): " + e.what());
            }
            ++index;
        }
    }
    return cells;
}

void write_contour_csv(std::ostream& out, const std::vector<ContourCell>& cells) {
    out << kContourHeader << '\n';
    for (const auto& c : cells) {
        out << format_number(c.temperature, 9) << ',' << format_number(c.time, 9) << ','
            << format_number(c.concentration, 9) << '\n';
    }
}

std::vector<ContourCell> read_contour_csv(std::istream& in) {
    std::vector<ContourCell> cells;
    for (const auto& r : read_csv(in, kContourHeader, "contour")) cells.push_back({r[0], r[1], r[2]});
    return cells;
}

}  // namespace h2plan::io
