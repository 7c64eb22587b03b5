#include "h2plan/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "h2plan/diffusion.hpp"
#include "h2plan/error.hpp"

namespace h2plan::fd {

namespace {
constexpr std::size_t kStartupSteps = 4;
}  // namespace

void FdConfig::validate() const {
    if (radial_points < 16) throw UsageError("FD solver needs at least 16 radial intervals");
    if (time_steps < 16) throw UsageError("FD solver needs at least 16 time steps");
    if (!(theta_end > 0.0) || !std::isfinite(theta_end)) throw UsageError("FD end time must be positive");
    if (!(grading >= 1.0)) throw UsageError("FD time grading must be >= 1");
}

void solve_tridiagonal(const double* lower, const double* diag, const double* upper, double* rhs, double* scratch,
                       std::size_t n) {
    double pivot = diag[0];
    if (pivot == 0.0) throw NumericError("tridiagonal solve: zero pivot in row 0");
    rhs[0] /= pivot;
    for (std::size_t i = 1; i < n; ++i) {
        scratch[i] = upper[i - 1] / pivot;
        pivot = diag[i] - lower[i] * scratch[i];
        if (pivot == 0.0) throw NumericError("tridiagonal solve: zero pivot in row " + std::to_string(i));
        rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] -= scratch[i + 1] * rhs[i + 1];
    }
}

planner::ConcentrationField fd_solve(const FdConfig& config, Direction direction) {
    config.validate();
    const std::size_t m = config.radial_points;
    const std::size_t nodes = m + 1;
    const double h = 1.0 / static_cast<double>(m);
    const double inv_h2 = 1.0 / (h * h);

    // Spatial operator L on the unknowns 0..m-1; node m carries the boundary value.
    std::vector<double> lo(nodes, 0.0), di(nodes, 0.0), up(nodes, 0.0);
    di[0] = -4.0 * inv_h2;
    up[0] = 4.0 * inv_h2;
    for (std::size_t i = 1; i < m; ++i) {
        const double r = static_cast<double>(i) * h;
        lo[i] = inv_h2 - 0.5 / (r * h);
        di[i] = -2.0 * inv_h2;
        up[i] = inv_h2 + 0.5 / (r * h);
    }

    // Out-diffusion: C = 1 inside, 0 on the surface. In-diffusion is the mirror image.
    const double inside = direction == Direction::out_diffusion ? 1.0 : 0.0;
    const double surface = 1.0 - inside;

    planner::ConcentrationField field;
    field.r_fractions.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) field.r_fractions[i] = static_cast<double>(i) * h;
    const std::size_t steps = config.time_steps;
    field.times.resize(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
        field.times[k] = config.theta_end * std::pow(static_cast<double>(k) / static_cast<double>(steps), config.grading);
    }
    field.times.back() = config.theta_end;
    field.thetas = field.times;
    field.values.assign((steps + 1) * nodes, inside);
    // Initial level: the surface node jumps to its boundary value for t > 0 only.
    field.values[m] = inside;

    std::vector<double> c(nodes, inside);
    c[m] = surface;
    std::vector<double> a(m), b(m), u(m), rhs(m), scratch(m);
    // One step of the weighted scheme: weight 1/2 is Crank-Nicolson, 1 is backward Euler.
    const auto advance = [&](double dt, double weight) {
        const double impl = weight * dt;
        const double expl = (1.0 - weight) * dt;
        for (std::size_t i = 0; i < m; ++i) {
            double lc = di[i] * c[i] + up[i] * c[i + 1];
            if (i > 0) lc += lo[i] * c[i - 1];
            rhs[i] = c[i] + expl * lc;
            a[i] = -impl * lo[i];
            b[i] = 1.0 - impl * di[i];
            u[i] = -impl * up[i];
        }
        // Known surface value moves to the right-hand side (implicit part).
        rhs[m - 1] += impl * up[m - 1] * surface;
        solve_tridiagonal(a.data(), b.data(), u.data(), rhs.data(), scratch.data(), m);
        for (std::size_t i = 0; i < m; ++i) c[i] = rhs[i];
        c[m] = surface;
    };
    for (std::size_t k = 0; k < steps; ++k) {
        const double dt = field.times[k + 1] - field.times[k];
        if (k < kStartupSteps) {
            // Rannacher start: damp the stiff modes excited by the surface jump,
            // which Crank-Nicolson alone would carry along undamped.
            advance(0.5 * dt, 1.0);
            advance(0.5 * dt, 1.0);
        } else {
            advance(dt, 0.5);
        }
        std::copy(c.begin(), c.end(), field.values.begin() + static_cast<std::ptrdiff_t>((k + 1) * nodes));
    }
    return field;
}

Comparison compare_with_series(const CompareConfig& config, Direction direction) {
    const auto field = fd_solve(config.fd, direction);
    Comparison out{0.0, 0.0, 0.0, 0};
    const std::size_t nodes = field.r_fractions.size();
    for (std::size_t k = 0; k < field.thetas.size(); ++k) {
        const double th = field.thetas[k];
        if (th < config.theta_min) continue;
        for (std::size_t i = 0; i < nodes; ++i) {
            const double r = field.r_fractions[i];
            if (r > config.r_max + 1e-12) break;
            const double err = std::abs(diffusion::concentration(r, th, direction) - field.at(k, i));
            ++out.samples;
            if (err > out.max_abs_error) {
                out.max_abs_error = err;
                out.r_frac = r;
                out.theta = th;
            }
        }
    }
    return out;
}

std::vector<double> discrete_mass(const planner::ConcentrationField& field) {
    const std::size_t nodes = field.r_fractions.size();
    std::vector<double> mass(field.thetas.size(), 0.0);
    for (std::size_t k = 0; k < mass.size(); ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < nodes; ++i) {
            const double r0 = field.r_fractions[i];
            const double r1 = field.r_fractions[i + 1];
            s += 0.5 * (r1 - r0) * (r0 * field.at(k, i) + r1 * field.at(k, i + 1));
        }
        mass[k] = s;
    }
    return mass;
}

}  // namespace h2plan::fd
