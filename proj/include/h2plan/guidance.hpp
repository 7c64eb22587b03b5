#pragma once

/**
 * @file guidance.hpp
 * @brief Single-mode criteria and macrobend sensitivity of (photonic crystal) fibers.
 */

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace h2plan::guidance {

/// Step-index single-mode cutoff (first zero of J0).
inline constexpr double kStepIndexCutoff = 2.405;

struct VResult {
    double v;
    bool single_mode;
};

/// V = 2 pi rho NA / lambda; single mode when V <= 2.405.
[[nodiscard]] VResult v_number(double core_radius, double numerical_aperture, double wavelength);

struct IndexSample {
    double wavelength;         ///< [m]
    double numerical_aperture; ///< effective NA, sqrt(n_co^2 - n_cl^2)
};

/// Effective NA as a constant or as a table linearly interpolated in wavelength.
class IndexData {
public:
    explicit IndexData(double constant_na);
    explicit IndexData(std::vector<IndexSample> samples);

    /// RangeError outside the tabulated wavelengths (no extrapolation).
    [[nodiscard]] double numerical_aperture(double wavelength) const;
    [[nodiscard]] bool is_constant() const noexcept { return std::holds_alternative<double>(data_); }
    [[nodiscard]] const std::vector<IndexSample>* samples() const noexcept {
        return std::get_if<std::vector<IndexSample>>(&data_);
    }

private:
    std::variant<double, std::vector<IndexSample>> data_;
};

/// V_PCF = 2 pi pitch NA_eff(lambda) / lambda; single mode when V_PCF <= pi.
[[nodiscard]] VResult v_pcf(double pitch, const IndexData& index, double wavelength);

struct BendCalibration {
    double wavelength;  ///< [m]
    double radius;      ///< critical radius observed at that wavelength [m]
};

struct BendModelParams {
    double v_star = 3.75;            ///< effective V parameter
    double effective_area = 36.75e-12;  ///< A_eff [m^2]
    double silica_index = 1.444;
    double reference_pitch = 6e-6;   ///< pitch of the fiber the parameters describe [m]
    std::optional<BendCalibration> calibration = BendCalibration{313e-9, 0.035};

    void validate() const;
};

/// LMA-PM-10 parameters with the default 313 nm / 3.5 cm calibration.
[[nodiscard]] BendModelParams lma_pm_10_bend() noexcept;

/// R_c = R_ref (lambda_ref / lambda)^2 (pitch / pitch_ref)^3. ConfigError without calibration.
[[nodiscard]] double critical_bend_radius(double pitch, double wavelength, const BendModelParams& params);

struct BendLossPoint {
    double radius;       ///< [m]
    double attenuation;  ///< [dB/m]
};

/// LP01 eigenvalues (U, W) of the equivalent step-index fiber with V = v_star.
[[nodiscard]] std::pair<double, double> equivalent_step_index_modes(double v);

/// Macrobending attenuation of the fundamental mode versus bend radius.
///
/// The fiber is replaced by an equivalent step-index guide with V = V* and
/// core radius sqrt(A_eff / pi) (scaled with pitch / reference pitch), and the
/// Sakai-Kimura / Marcuse pure-bend formula
///
///     alpha = sqrt(pi) kappa^2 exp(-(2/3) gamma^3 R / beta^2)
///             / (2 gamma^(3/2) V^2 sqrt(R) K1(gamma a)^2)
///
/// is evaluated with beta = n_s k. Holding V fixed makes the exponent scale
/// as lambda^2 / pitch^3, which is the critical-radius law above.
/// UsageError for an empty radius list.
[[nodiscard]] std::vector<BendLossPoint> bend_loss_curve(const std::vector<double>& radii, double wavelength,
                                                         const BendModelParams& params, double pitch);
[[nodiscard]] std::vector<BendLossPoint> bend_loss_curve(const std::vector<double>& radii, double wavelength,
                                                         const BendModelParams& params);

/// Radius at which the attenuation falls to `level` dB/m (bisection on the monotone curve).
[[nodiscard]] double knee_radius(double wavelength, const BendModelParams& params, double pitch, double level = 1.0);

}  // namespace h2plan::guidance
