#include "h2plan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string_view>
#include <variant>

#include "h2plan/bessel.hpp"
#include "h2plan/diffusion.hpp"
#include "h2plan/fd_oracle.hpp"
#include "h2plan/guidance.hpp"
#include "h2plan/io.hpp"
#include "h2plan/material.hpp"
#include "h2plan/planner.hpp"
#include "h2plan/units.hpp"

namespace h2plan::cli {

namespace {

using units::Dimension;

enum class Format { human, csv };

constexpr int kHumanDigits = 4;
constexpr int kMachineDigits = 9;

int digits(Format f) { return f == Format::human ? kHumanDigits : kMachineDigits; }

/// Ordered key/value/unit records.
class Report {
public:
    void add(std::string key, double value, std::string unit = "", std::string note = "") {
        rows_.push_back({std::move(key), value, std::move(unit), std::move(note)});
    }
    void add_text(std::string key, std::string text) { rows_.push_back({std::move(key), std::move(text), "", ""}); }
    void add_time(std::string key, double seconds) { add(std::move(key), seconds, "s", humanize_duration(seconds)); }

    void print(std::ostream& out, Format format) const {
        if (format == Format::csv) {
            out << "key,value,unit,note\n";
            for (const auto& r : rows_) out << r.key << ',' << value_text(r, format) << ',' << r.unit << ',' << r.note << '\n';
            return;
        }
        std::size_t width = 0;
        for (const auto& r : rows_) width = std::max(width, r.key.size());
        for (const auto& r : rows_) {
            out << std::left << std::setw(static_cast<int>(width) + 2) << r.key << value_text(r, format);
            if (!r.unit.empty()) out << ' ' << r.unit;
            if (!r.note.empty()) out << "  (" << r.note << ')';
            out << '\n';
        }
    }

private:
    struct Row {
        std::string key;
        std::variant<double, std::string> value;
        std::string unit;
        std::string note;
    };

    static std::string value_text(const Row& r, Format format) {
        if (const auto* d = std::get_if<double>(&r.value)) {
            // Kelvin needs two decimals to show 293.15 K as such.
            const int sig = format == Format::human && r.unit == "K" ? kHumanDigits + 1 : digits(format);
            return io::format_number(*d, sig);
        }
        return std::get<std::string>(r.value);
    }

    std::vector<Row> rows_;
};

/// Numeric table; aligned columns for humans, CSV otherwise.
void print_table(std::ostream& out, Format format, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
    if (format == Format::csv) {
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << io::format_number(row[i], kMachineDigits);
            out << '\n';
        }
        return;
    }
    out << std::right;
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = std::max<std::size_t>(header[i].size(), 11);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << io::format_number(row[i], kHumanDigits);
        }
        out << '\n';
    }
}

/// A dimensionless number; unit suffixes are rejected.
double parse_plain(const std::string& text, const char* flag) {
    try {
        return io::parse_number(text, flag);
    } catch (const DataError&) {
        throw UsageError(std::string(flag) + ": expected a plain number, got '" + text + "'");
    }
}

/// "a,b,c" with units, or "start:stop:count[:log]".
std::vector<double> parse_list(const std::string& text, Dimension dim, const char* flag) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3 && !(parts.size() == 4 && parts[3] == "log")) {
            throw UsageError(std::string(flag) + ": range must be start:stop:count[:log]");
        }
        const double a = units::parse_si(parts[0], dim);
        const double b = units::parse_si(parts[1], dim);
        const double count = parse_plain(parts[2], flag);
        if (!(count >= 1.0) || count != std::floor(count) || count > 1e6) {
            throw UsageError(std::string(flag) + ": count must be a positive integer");
        }
        const auto n = static_cast<std::size_t>(count);
        const bool log = parts.size() == 4;
        if (log && !(a > 0.0 && b > 0.0)) throw UsageError(std::string(flag) + ": log range needs positive ends");
        for (std::size_t i = 0; i < n; ++i) {
            const double w = n == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
            out.push_back(log ? std::exp(std::log(a) + w * (std::log(b) - std::log(a))) : a + w * (b - a));
        }
        return out;
    }
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(units::parse_si(item, dim));
    if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
    return out;
}

std::vector<double> parse_plain_list(const std::string& text, const char* flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_plain(item, flag));
    if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
    return out;
}

struct Options {
    std::string presets_path;
    std::string format = "human";
    std::string material = "fused-silica";
    std::string fiber = "LMA-PM-10";
    std::string geometry = "solid";
    std::string direction = "in";
    std::string temp;
    std::string pressure;
    std::string target;
    std::string time;
    std::string theta;
    std::string r = "0";
    std::string fraction;
    std::string remaining;
    std::string pmax;
    std::string tmax = "60C";
    std::string tmin = "0C";
    std::size_t grid_p = 25;
    std::size_t grid_t = 25;
    std::size_t passes = 2;
    std::string file;
    std::string temps;
    std::string times;
    std::string wavelength;
    std::string core_radius;
    std::string pitch;
    std::string na;
    std::string index_table;
    std::string radii = "1cm:10cm:10";
    std::string bend_preset = "LMA-PM-10";
    std::size_t radial_points = 512;
    std::size_t steps = 2048;
    std::string theta_end = "1";
    std::string theta_min = "1e-3";
    std::string r_max = "0.9";
};

struct Context {
    const Options& opt;
    Format format;
    io::PresetLibrary presets;
    std::ostream& out;

    [[nodiscard]] const material::MaterialModel& material() const { return presets.material(opt.material); }
    [[nodiscard]] const FiberSpec& fiber() const { return presets.fiber(opt.fiber); }
    [[nodiscard]] GeometryCase geometry() const { return parse_geometry_case(opt.geometry); }
    [[nodiscard]] Direction direction() const { return parse_direction(opt.direction); }
};

double require_si(const std::string& text, Dimension dim, const char* flag) {
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    return units::parse_si(text, dim);
}

double require_plain(const std::string& text, const char* flag) {
    if (text.empty()) throw UsageError(std::string(flag) + " is required");
    return parse_plain(text, flag);
}

void cmd_constants(Context& ctx) {
    const auto& c = units::constants();
    Report r;
    r.add("boltzmann", c.boltzmann, "J/K");
    r.add("planck", c.planck, "J s");
    r.add("avogadro", c.avogadro, "1/mol");
    r.add("gas_constant", c.gas_constant(), "J/(mol K)");
    r.add("atomic_mass_unit", c.atomic_mass_unit, "kg");
    r.add("h2_molecular_mass", c.h2_molecular_mass, "kg");
    r.print(ctx.out, ctx.format);
}

void cmd_diffusivity(Context& ctx) {
    const double t = require_si(ctx.opt.temp, Dimension::temperature, "--temp");
    const double d = material::diffusivity(t, ctx.material().diffusivity);
    Report r;
    r.add("temperature", t, "K");
    r.add("diffusivity", d, "m2/s");
    r.add("diffusivity_cgs", d * 1e4, "cm2/s");
    r.print(ctx.out, ctx.format);
}

void cmd_solubility(Context& ctx) {
    const double p = require_si(ctx.opt.pressure, Dimension::pressure, "--pressure");
    const double t = require_si(ctx.opt.temp, Dimension::temperature, "--temp");
    const double s = material::solubility(p, t, ctx.material().solubility);
    Report r;
    r.add("pressure", p, "Pa");
    r.add("temperature", t, "K");
    r.add("solubility", s, "m-3");
    r.add("solubility_cgs", s * 1e-6, "cm-3");
    r.print(ctx.out, ctx.format);
}

void cmd_concentration(Context& ctx) {
    const double r_frac = parse_plain(ctx.opt.r, "--r");
    const Direction dir = ctx.direction();
    Report r;
    double th = 0.0;
    if (!ctx.opt.theta.empty()) {
        th = parse_plain(ctx.opt.theta, "--theta");
    } else {
        const double t = require_si(ctx.opt.time, Dimension::time, "--time (or --theta)");
        const double temp = require_si(ctx.opt.temp, Dimension::temperature, "--temp");
        const double radius = effective_radius(ctx.fiber(), ctx.geometry());
        th = diffusion::theta(material::diffusivity(temp, ctx.material().diffusivity), t, radius);
        r.add_text("fiber", ctx.fiber().name);
        r.add_text("case", std::string(to_string(ctx.geometry())));
        r.add("effective_radius", radius, "m");
        r.add_time("time", t);
        r.add("temperature", temp, "K");
    }
    const auto eval = diffusion::evaluate_out_series(r_frac, th);
    const double c = dir == Direction::in_diffusion ? 1.0 - eval.value : eval.value;
    r.add_text("direction", std::string(to_string(dir)));
    r.add("r_frac", r_frac);
    r.add("theta", th);
    r.add("concentration", c);
    r.add("series_terms", static_cast<double>(eval.terms));
    r.print(ctx.out, ctx.format);
}

void cmd_load_time(Context& ctx) {
    const double x = require_plain(ctx.opt.fraction, "--fraction");
    const double temp = require_si(ctx.opt.temp, Dimension::temperature, "--temp");
    const double r_frac = parse_plain(ctx.opt.r, "--r");
    const double radius = effective_radius(ctx.fiber(), ctx.geometry());
    const double th = diffusion::invert_time(x, r_frac, Direction::in_diffusion);
    const double d = material::diffusivity(temp, ctx.material().diffusivity);
    Report r;
    r.add_text("fiber", ctx.fiber().name);
    r.add_text("case", std::string(to_string(ctx.geometry())));
    r.add("effective_radius", radius, "m");
    r.add("temperature", temp, "K");
    r.add("fraction", x);
    r.add("r_frac", r_frac);
    r.add("theta", th);
    r.add("diffusivity", d, "m2/s");
    r.add_time("load_time", diffusion::time_from_theta(th, d, radius));
    r.print(ctx.out, ctx.format);
}

void cmd_storage_time(Context& ctx) {
    const double x = require_plain(ctx.opt.remaining, "--remaining");
    const double temp = require_si(ctx.opt.temp, Dimension::temperature, "--temp");
    const auto geometry = ctx.geometry();
    const double t = planner::storage_time(x, temp, ctx.fiber(), geometry, ctx.material().diffusivity);
    Report r;
    r.add_text("fiber", ctx.fiber().name);
    r.add_text("case", std::string(to_string(geometry)));
    r.add("effective_radius", effective_radius(ctx.fiber(), geometry), "m");
    r.add("temperature", temp, "K");
    r.add("remaining_fraction", x);
    r.add_time("storage_time", t);
    r.print(ctx.out, ctx.format);
}

void cmd_plan(Context& ctx) {
    const double n = require_si(ctx.opt.target, Dimension::concentration, "--target");
    const double p = require_si(ctx.opt.pressure, Dimension::pressure, "--pressure");
    const double temp = require_si(ctx.opt.temp, Dimension::temperature, "--temp");
    const auto plan = planner::loading_plan(n, p, temp, ctx.fiber(), ctx.material());
    Report r;
    r.add_text("fiber", ctx.fiber().name);
    r.add("pressure", p, "Pa");
    r.add("temperature", temp, "K");
    r.add("step1_target_concentration", plan.target_concentration * 1e-6, "cm-3");
    r.add("step2_solubility", plan.solubility * 1e-6, "cm-3");
    r.add("step2_fraction", plan.fraction);
    r.add("step3_theta", plan.theta);
    r.add("step3_diffusivity", plan.diffusivity, "m2/s");
    r.add("step3_reference_radius", plan.reference_radius, "m");
    r.add_time("step3_reference_time", plan.reference_time);
    for (const auto& c : plan.cases) {
        const std::string name(to_string(c.geometry));
        r.add("step4_" + name + "_radius", c.effective_radius, "m");
        r.add_time("step4_" + name + "_time", c.time);
    }
    r.add("center_concentration", plan.center_concentration * 1e-6, "cm-3");
    r.print(ctx.out, ctx.format);
}

void cmd_optimize(Context& ctx) {
    const double n = require_si(ctx.opt.target, Dimension::concentration, "--target");
    const double pmax = require_si(ctx.opt.pmax, Dimension::pressure, "--pmax");
    const double tmax = require_si(ctx.opt.tmax, Dimension::temperature, "--tmax");
    planner::OptimizerGrid grid;
    grid.pressure_points = ctx.opt.grid_p;
    grid.temperature_points = ctx.opt.grid_t;
    grid.refinement_passes = ctx.opt.passes;
    grid.temperature_min = require_si(ctx.opt.tmin, Dimension::temperature, "--tmin");
    const auto best = planner::optimize_conditions(n, pmax, tmax, ctx.fiber(), ctx.geometry(), grid, ctx.material());
    Report r;
    r.add_text("fiber", ctx.fiber().name);
    r.add_text("case", std::string(to_string(ctx.geometry())));
    r.add("target_concentration", n * 1e-6, "cm-3");
    r.add("best_pressure", best.pressure, "Pa");
    r.add("best_temperature", best.temperature, "K");
    r.add("fraction", best.fraction);
    r.add_time("load_time", best.time);
    r.add("evaluations", static_cast<double>(best.evaluations));
    r.print(ctx.out, ctx.format);
}

void cmd_schedule(Context& ctx) {
    if (ctx.opt.file.empty()) throw UsageError("--file is required");
    const auto schedule = io::read_schedule_file(ctx.opt.file);
    const auto r_fracs = parse_plain_list(ctx.opt.r, "--r");
    const auto field = planner::schedule_concentration(schedule, ctx.fiber(), ctx.geometry(), r_fracs,
                                                       ctx.direction(), ctx.material().diffusivity);
    std::vector<std::string> header{"time_s", "theta"};
    for (const double r : r_fracs) header.push_back("c_r" + io::format_number(r, 6));
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < field.times.size(); ++k) {
        std::vector<double> row{field.times[k], field.thetas[k]};
        for (std::size_t i = 0; i < r_fracs.size(); ++i) row.push_back(field.at(k, i));
        rows.push_back(std::move(row));
    }
    print_table(ctx.out, ctx.format, header, rows);
}

void cmd_contour(Context& ctx) {
    if (ctx.opt.temps.empty() || ctx.opt.times.empty()) throw UsageError("--temps and --times are required");
    const auto temps = parse_list(ctx.opt.temps, Dimension::temperature, "--temps");
    const auto times = parse_list(ctx.opt.times, Dimension::time, "--times");
    const auto cells = io::emit_contour(temps, times, ctx.fiber(), ctx.geometry(), parse_plain(ctx.opt.r, "--r"),
                                        ctx.direction(), ctx.material().diffusivity);
    io::write_contour_csv(ctx.out, cells);
}

void cmd_single_mode(Context& ctx) {
    const double lambda = require_si(ctx.opt.wavelength, Dimension::length, "--wavelength");
    if (ctx.opt.core_radius.empty() == ctx.opt.pitch.empty()) {
        throw UsageError("give exactly one of --core-radius (step index) or --pitch (PCF)");
    }
    if (ctx.opt.na.empty() == ctx.opt.index_table.empty()) {
        throw UsageError("give exactly one of --na or --index-table");
    }
    const guidance::IndexData index = ctx.opt.na.empty() ? io::read_index_table_file(ctx.opt.index_table)
                                                         : guidance::IndexData(parse_plain(ctx.opt.na, "--na"));
    Report r;
    guidance::VResult v{};
    if (!ctx.opt.core_radius.empty()) {
        const double rho = units::parse_si(ctx.opt.core_radius, Dimension::length);
        v = guidance::v_number(rho, index.numerical_aperture(lambda), lambda);
        r.add_text("model", "step-index");
        r.add("core_radius", rho, "m");
        r.add("cutoff", guidance::kStepIndexCutoff);
    } else {
        const double pitch = units::parse_si(ctx.opt.pitch, Dimension::length);
        v = guidance::v_pcf(pitch, index, lambda);
        r.add_text("model", "pcf");
        r.add("pitch", pitch, "m");
        r.add("cutoff", std::numbers::pi);
    }
    r.add("wavelength", lambda, "m");
    r.add("numerical_aperture", index.numerical_aperture(lambda));
    r.add("v", v.v);
    r.add_text("single_mode", v.single_mode ? "yes" : "no");
    r.print(ctx.out, ctx.format);
}

void cmd_bend(Context& ctx) {
    const double lambda = require_si(ctx.opt.wavelength, Dimension::length, "--wavelength");
    const auto& params = ctx.presets.bend(ctx.opt.bend_preset);
    const double pitch = ctx.opt.pitch.empty() ? params.reference_pitch
                                               : units::parse_si(ctx.opt.pitch, Dimension::length);
    const auto radii = parse_list(ctx.opt.radii, Dimension::length, "--radii");
    const auto curve = guidance::bend_loss_curve(radii, lambda, params, pitch);
    Report r;
    r.add("wavelength", lambda, "m");
    r.add("pitch", pitch, "m");
    if (params.calibration) r.add("critical_radius", guidance::critical_bend_radius(pitch, lambda, params), "m");
    r.add("knee_radius_1dB_per_m", guidance::knee_radius(lambda, params, pitch), "m");
    r.print(ctx.out, ctx.format);
    std::vector<std::vector<double>> rows;
    for (const auto& pt : curve) rows.push_back({pt.radius, pt.attenuation});
    print_table(ctx.out, ctx.format, {"radius_m", "attenuation_dB_per_m"}, rows);
}

void cmd_energy(Context& ctx) {
    if (ctx.opt.file.empty()) throw UsageError("--log is required");
    const auto log = io::read_power_log_file(ctx.opt.file);
    Report r;
    r.add("rows", static_cast<double>(log.rows.size()));
    r.add_time("duration", log.rows.back().time - log.rows.front().time);
    r.add("energy", io::integrate_energy(log), "J");
    r.print(ctx.out, ctx.format);
}

bool cmd_verify(Context& ctx) {
    fd::CompareConfig cfg;
    cfg.fd.radial_points = ctx.opt.radial_points;
    cfg.fd.time_steps = ctx.opt.steps;
    cfg.fd.theta_end = parse_plain(ctx.opt.theta_end, "--theta-end");
    cfg.theta_min = parse_plain(ctx.opt.theta_min, "--theta-min");
    cfg.r_max = parse_plain(ctx.opt.r_max, "--r-max");
    const auto cmp = fd::compare_with_series(cfg);

    // Richardson estimate of the convergence order from three nested grids.
    double center[3];
    for (int level = 0; level < 3; ++level) {
        fd::FdConfig c = cfg.fd;
        c.radial_points = std::max<std::size_t>(16, cfg.fd.radial_points >> (2 - level));
        c.time_steps = std::max<std::size_t>(16, cfg.fd.time_steps >> (2 - level));
        const auto field = fd::fd_solve(c, Direction::out_diffusion);
        center[level] = field.at(field.thetas.size() - 1, 0);
    }
    const double order = std::log2(std::abs((center[0] - center[1]) / (center[1] - center[2])));
    constexpr double kThreshold = 5e-4;
    const bool pass = cmp.max_abs_error <= kThreshold;

    Report r;
    r.add("radial_points", static_cast<double>(cfg.fd.radial_points));
    r.add("time_steps", static_cast<double>(cfg.fd.time_steps));
    r.add("theta_end", cfg.fd.theta_end);
    r.add("samples", static_cast<double>(cmp.samples));
    r.add("max_abs_error", cmp.max_abs_error);
    r.add("at_r_frac", cmp.r_frac);
    r.add("at_theta", cmp.theta);
    r.add("threshold", kThreshold);
    r.add("richardson_order", order);
    r.add_text("result", pass ? "PASS" : "FAIL");
    r.print(ctx.out, ctx.format);
    return pass;
}

void cmd_presets(Context& ctx) {
    Report r;
    for (const auto& [name, f] : ctx.presets.fibers) {
        r.add_text("fiber", name);
        r.add(name + ".cladding_radius", f.cladding_radius, "m");
        r.add(name + ".pitch", f.pitch, "m");
        r.add(name + ".hole_diameter", f.hole_diameter, "m");
        r.add(name + ".mode_field_diameter", f.mode_field_diameter, "m");
        r.add(name + ".endcap_thickness_min", f.endcap_thickness_min, "m");
        r.add(name + ".endcap_thickness_max", f.endcap_thickness_max, "m");
        r.add(name + ".open_hole_radius", f.open_hole_radius, "m");
    }
    for (const auto& [name, m] : ctx.presets.materials) {
        r.add_text("material", name);
        r.add(name + ".diffusivity_prefactor", m.diffusivity.prefactor, "m2/s");
        r.add(name + ".activation_energy", m.diffusivity.activation_energy, "J/mol");
        r.add(name + ".lattice_site_density", m.solubility.lattice_site_density, "m-3");
        r.add(name + ".characteristic_temperature", m.solubility.characteristic_temperature, "K");
        r.add(name + ".binding_energy", m.solubility.binding_energy, "J/mol");
    }
    for (const auto& [name, b] : ctx.presets.bends) {
        r.add_text("bend", name);
        r.add(name + ".v_star", b.v_star);
        r.add(name + ".effective_area", b.effective_area, "m2");
        r.add(name + ".silica_index", b.silica_index);
        r.add(name + ".reference_pitch", b.reference_pitch, "m");
        if (b.calibration) {
            r.add(name + ".calibration_wavelength", b.calibration->wavelength, "m");
            r.add(name + ".calibration_radius", b.calibration->radius, "m");
        }
    }
    r.print(ctx.out, ctx.format);
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::usage: return kUsage;
        case ErrorKind::domain:
        case ErrorKind::data:
        case ErrorKind::range:
        case ErrorKind::config:
        case ErrorKind::numeric: return kDomain;
        case ErrorKind::convergence: return kConvergence;
        case ErrorKind::infeasible: return kInfeasible;
    }
    return kDomain;
}

std::string humanize_duration(double seconds) {
    struct Scale {
        double limit;
        double unit;
        const char* name;
    };
    constexpr double kDay = 86400.0;
    constexpr Scale scales[] = {
        {120.0, 1.0, "s"},
        {2.0 * 3600.0, 60.0, "min"},
        {2.0 * kDay, 3600.0, "h"},
        {60.0 * kDay, kDay, "days"},
        {730.0 * kDay, 30.4375 * kDay, "months"},
    };
    for (const auto& s : scales) {
        if (std::abs(seconds) < s.limit) return io::format_number(seconds / s.unit, 3) + " " + s.name;
    }
    return io::format_number(seconds / (365.25 * kDay), 3) + " years";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Hydrogen loading, storage and curing planner for UV fiber patch cords", "h2plan"};
    app.require_subcommand(1);
    app.add_option("--presets", opt.presets_path, "Preset file (overrides $H2PLAN_PRESETS and the built-in presets)");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "csv"}));
    app.add_option("--material", opt.material, "Material preset");

    const auto fiber_opts = [&](CLI::App* sub) {
        sub->add_option("--fiber", opt.fiber, "Fiber preset");
        sub->add_option("--case", opt.geometry, "Geometry case: open, solid, endcap");
    };

    app.add_subcommand("constants", "Physical constants");
    auto* diff = app.add_subcommand("diffusivity", "H2 diffusivity in silica");
    diff->add_option("--temp", opt.temp, "Temperature, e.g. 20C or 293.15K");
    auto* sol = app.add_subcommand("solubility", "H2 solubility in silica");
    sol->add_option("--pressure", opt.pressure, "Pressure, e.g. 100bar");
    sol->add_option("--temp", opt.temp, "Temperature");
    auto* conc = app.add_subcommand("concentration", "Relative concentration at (r, t)");
    fiber_opts(conc);
    conc->add_option("--r", opt.r, "Radial fraction r / R_eff");
    conc->add_option("--theta", opt.theta, "Dimensionless time D t / R^2");
    conc->add_option("--time", opt.time, "Time, e.g. 15d");
    conc->add_option("--temp", opt.temp, "Temperature");
    conc->add_option("--direction", opt.direction, "in or out");
    auto* load = app.add_subcommand("load-time", "Time for the axis to reach a fraction of saturation");
    fiber_opts(load);
    load->add_option("--fraction", opt.fraction, "Target fraction of saturation");
    load->add_option("--temp", opt.temp, "Temperature");
    load->add_option("--r", opt.r, "Radial fraction");
    auto* store = app.add_subcommand("storage-time", "Time until the axis keeps only a fraction of its hydrogen");
    fiber_opts(store);
    store->add_option("--remaining", opt.remaining, "Remaining fraction");
    store->add_option("--temp", opt.temp, "Storage temperature");
    auto* plan = app.add_subcommand("plan", "Four-step loading plan");
    fiber_opts(plan);
    plan->add_option("--target", opt.target, "Target concentration, e.g. 2e20cm-3");
    plan->add_option("--pressure", opt.pressure, "Loading pressure");
    plan->add_option("--temp", opt.temp, "Loading temperature");
    auto* optim = app.add_subcommand("optimize", "Fastest loading conditions on a (p, T) grid");
    fiber_opts(optim);
    optim->add_option("--target", opt.target, "Target concentration");
    optim->add_option("--pmax", opt.pmax, "Maximum pressure");
    optim->add_option("--tmax", opt.tmax, "Maximum temperature (default 60C)");
    optim->add_option("--tmin", opt.tmin, "Minimum temperature (default 0C)");
    optim->add_option("--grid-p", opt.grid_p, "Pressure grid points");
    optim->add_option("--grid-t", opt.grid_t, "Temperature grid points");
    optim->add_option("--passes", opt.passes, "Refinement passes");
    auto* sched = app.add_subcommand("schedule", "Concentration through a piecewise temperature history");
    fiber_opts(sched);
    sched->add_option("--file", opt.file, "CSV with header duration_s,temperature_C");
    sched->add_option("--r", opt.r, "Radial fraction(s), comma separated");
    sched->add_option("--direction", opt.direction, "in or out");
    auto* contour = app.add_subcommand("contour", "Concentration grid over temperature and time (CSV)");
    fiber_opts(contour);
    contour->add_option("--temps", opt.temps, "Temperatures: list or start:stop:count");
    contour->add_option("--times", opt.times, "Times: list or start:stop:count[:log]");
    contour->add_option("--r", opt.r, "Radial fraction");
    contour->add_option("--direction", opt.direction, "in or out");
    auto* sm = app.add_subcommand("single-mode", "V parameter and single-mode check");
    sm->add_option("--wavelength", opt.wavelength, "Wavelength, e.g. 313nm");
    sm->add_option("--core-radius", opt.core_radius, "Step-index core radius");
    sm->add_option("--pitch", opt.pitch, "PCF hole pitch");
    sm->add_option("--na", opt.na, "Constant (effective) NA");
    sm->add_option("--index-table", opt.index_table, "CSV with header wavelength_nm,effective_NA");
    auto* bend = app.add_subcommand("bend", "Critical bend radius and macrobend loss curve");
    bend->add_option("--wavelength", opt.wavelength, "Wavelength");
    bend->add_option("--pitch", opt.pitch, "Pitch (default: the bend preset's reference pitch)");
    bend->add_option("--radii", opt.radii, "Bend radii: list or start:stop:count[:log]");
    bend->add_option("--bend-preset", opt.bend_preset, "Bend model preset");
    auto* energy = app.add_subcommand("energy", "Cumulative optical energy from a power log");
    energy->add_option("--log", opt.file, "CSV with header time_s,power_mW");
    auto* verify = app.add_subcommand("verify", "Compare the series solution with the finite-difference solver");
    verify->add_option("--radial-points", opt.radial_points, "Radial intervals");
    verify->add_option("--steps", opt.steps, "Time steps");
    verify->add_option("--theta-end", opt.theta_end, "Final dimensionless time");
    verify->add_option("--theta-min", opt.theta_min, "Smallest compared dimensionless time");
    verify->add_option("--r-max", opt.r_max, "Largest compared radial fraction");
    app.add_subcommand("presets", "List available presets");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        Context ctx{opt, opt.format == "csv" ? Format::csv : Format::human, io::resolve_presets(opt.presets_path), out};
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "constants") cmd_constants(ctx);
        else if (name == "diffusivity") cmd_diffusivity(ctx);
        else if (name == "solubility") cmd_solubility(ctx);
        else if (name == "concentration") cmd_concentration(ctx);
        else if (name == "load-time") cmd_load_time(ctx);
        else if (name == "storage-time") cmd_storage_time(ctx);
        else if (name == "plan") cmd_plan(ctx);
        else if (name == "optimize") cmd_optimize(ctx);
        else if (name == "schedule") cmd_schedule(ctx);
        else if (name == "contour") cmd_contour(ctx);
        else if (name == "single-mode") cmd_single_mode(ctx);
        else if (name == "bend") cmd_bend(ctx);
        else if (name == "energy") cmd_energy(ctx);
        else if (name == "verify") return cmd_verify(ctx) ? kSuccess : kConvergence;
        else if (name == "presets") cmd_presets(ctx);
    } catch (const Error& e) {
        err << "h2plan: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "h2plan: " << e.what() << '\n';
        return kDomain;
    }
    return kSuccess;
}

}  // namespace h2plan::cli
