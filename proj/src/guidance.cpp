#include "h2plan/guidance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "h2plan/bessel.hpp"
#include "h2plan/error.hpp"
#include "h2plan/roots.hpp"

namespace h2plan::guidance {

using std::numbers::pi;

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(what) + " must be positive");
    }
}

constexpr double kDbPerNeper = 10.0 / std::numbers::ln10;  // power attenuation: 10 log10(e)

}  // namespace

VResult v_number(double core_radius, double numerical_aperture, double wavelength) {
    require_positive(core_radius, "core radius");
    require_positive(numerical_aperture, "numerical aperture");
    require_positive(wavelength, "wavelength");
    const double v = 2.0 * pi * core_radius * numerical_aperture / wavelength;
    return {v, v <= kStepIndexCutoff};
}

IndexData::IndexData(double constant_na) : data_(constant_na) {
    if (!(constant_na > 0.0 && constant_na < 1.0)) {
        throw DataError("effective NA must lie in (0, 1)");
    }
}

IndexData::IndexData(std::vector<IndexSample> samples) : data_(std::move(samples)) {
    const auto& s = std::get<std::vector<IndexSample>>(data_);
    if (s.empty()) throw DataError("index table is empty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i].numerical_aperture > 0.0 && s[i].numerical_aperture < 1.0)) {
            throw DataError("index table row " + std::to_string(i + 1) + ": NA must lie in (0, 1)");
        }
        if (!(s[i].wavelength > 0.0)) {
            throw DataError("index table row " + std::to_string(i + 1) + ": wavelength must be positive");
        }
        if (i > 0 && !(s[i].wavelength > s[i - 1].wavelength)) {
            throw DataError("index table row " + std::to_string(i + 1) + ": wavelengths must increase strictly");
        }
    }
}

double IndexData::numerical_aperture(double wavelength) const {
    if (const auto* na = std::get_if<double>(&data_)) return *na;
    const auto& s = std::get<std::vector<IndexSample>>(data_);
    if (wavelength < s.front().wavelength || wavelength > s.back().wavelength) {
        throw RangeError("wavelength " + std::to_string(wavelength * 1e9) + " nm outside the index table");
    }
    const auto hi = std::lower_bound(s.begin(), s.end(), wavelength,
                                     [](const IndexSample& a, double w) { return a.wavelength < w; });
    if (hi->wavelength == wavelength) return hi->numerical_aperture;
    const auto lo = hi - 1;
    const double w = (wavelength - lo->wavelength) / (hi->wavelength - lo->wavelength);
    return lo->numerical_aperture + w * (hi->numerical_aperture - lo->numerical_aperture);
}

VResult v_pcf(double pitch, const IndexData& index, double wavelength) {
    require_positive(pitch, "pitch");
    require_positive(wavelength, "wavelength");
    const double v = 2.0 * pi * pitch * index.numerical_aperture(wavelength) / wavelength;
    return {v, v <= pi};
}

void BendModelParams::validate() const {
    if (!(v_star > 0.0) || !(effective_area > 0.0) || !(silica_index > 0.0) || !(reference_pitch > 0.0)) {
        throw ConfigError("bend model parameters must be positive");
    }
    if (calibration) {
        if (!(calibration->wavelength > 0.0)) throw ConfigError("calibration wavelength must be positive");
        if (!(calibration->radius >= 1e-3 && calibration->radius <= 1.0)) {
            throw ConfigError("calibration radius must lie within [1 mm, 1 m]");
        }
    }
}

BendModelParams lma_pm_10_bend() noexcept { return {}; }

double critical_bend_radius(double pitch, double wavelength, const BendModelParams& params) {
    if (!params.calibration) throw ConfigError("critical bend radius needs a calibration point");
    params.validate();
    require_positive(pitch, "pitch");
    require_positive(wavelength, "wavelength");
    const double lambda_ratio = params.calibration->wavelength / wavelength;
    const double pitch_ratio = pitch / params.reference_pitch;
    return params.calibration->radius * (lambda_ratio * lambda_ratio) * (pitch_ratio * pitch_ratio * pitch_ratio);
}

std::pair<double, double> equivalent_step_index_modes(double v) {
    require_positive(v, "V");
    // LP01: U J1(U) / J0(U) = W K1(W) / K0(W), U^2 + W^2 = V^2, 0 < U < min(V, j01).
    const double upper = std::min(v, bessel::j0_zero(1)) * (1.0 - 1e-12);
    const auto f = [v](double u) {
        const double w = std::sqrt(v * v - u * u);
        return u * bessel::j1(u) / bessel::j0(u) - w * std::cyl_bessel_k(1.0, w) / std::cyl_bessel_k(0.0, w);
    };
    const auto root = roots::brent(f, 1e-6 * upper, upper, 1e-15, 0.0);
    return {root.x, std::sqrt(v * v - root.x * root.x)};
}

std::vector<BendLossPoint> bend_loss_curve(const std::vector<double>& radii, double wavelength,
                                           const BendModelParams& params, double pitch) {
    if (radii.empty()) throw UsageError("bend loss curve needs at least one radius");
    params.validate();
    require_positive(wavelength, "wavelength");
    require_positive(pitch, "pitch");
    const double core = std::sqrt(params.effective_area / pi) * (pitch / params.reference_pitch);
    const double v = params.v_star;
    const auto [u, w] = equivalent_step_index_modes(v);
    const double kappa = u / core;
    const double gamma = w / core;
    const double beta = params.silica_index * 2.0 * pi / wavelength;
    const double k1 = std::cyl_bessel_k(1.0, w);
    const double decay = (2.0 / 3.0) * gamma * gamma * gamma / (beta * beta);
    const double prefactor = std::sqrt(pi) * kappa * kappa / (2.0 * std::pow(gamma, 1.5) * v * v * k1 * k1);

    std::vector<BendLossPoint> curve;
    curve.reserve(radii.size());
    for (const double r : radii) {
        if (r == std::numeric_limits<double>::infinity()) {
            curve.push_back({r, 0.0});  // straight fiber
            continue;
        }
        require_positive(r, "bend radius");
        curve.push_back({r, kDbPerNeper * prefactor * std::exp(-decay * r) / std::sqrt(r)});
    }
    return curve;
}

std::vector<BendLossPoint> bend_loss_curve(const std::vector<double>& radii, double wavelength,
                                           const BendModelParams& params) {
    return bend_loss_curve(radii, wavelength, params, params.reference_pitch);
}

double knee_radius(double wavelength, const BendModelParams& params, double pitch, double level) {
    require_positive(level, "attenuation level");
    const auto loss = [&](double r) { return bend_loss_curve({r}, wavelength, params, pitch).front().attenuation; };
    double lo = 1e-6;
    double hi = 1e-3;
    while (loss(hi) > level) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e3) throw ConvergenceError("attenuation never falls below the requested level");
    }
    const auto f = [&](double log_r) { return std::log(loss(std::exp(log_r)) / level); };
    const auto root = roots::brent(f, std::log(lo), std::log(hi), 1e-14, 0.0);
    return std::exp(root.x);
}

}  // namespace h2plan::guidance
