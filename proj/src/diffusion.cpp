#include "h2plan/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "h2plan/bessel.hpp"
#include "h2plan/error.hpp"
#include "h2plan/roots.hpp"

namespace h2plan::diffusion {

namespace {

// Consecutive zeros of J0 are never closer than mu_2 - mu_1 = 3.1153.
constexpr double kMinZeroGap = 3.11;

// Summation target, far below the guaranteed kSeriesTolerance so that values
// within 1e-12 of 1 still decrease monotonically in theta.
constexpr double kTailTarget = 1e-17;

void require_r_frac(double r_frac) {
    if (!(r_frac >= 0.0 && r_frac <= 1.0)) {
        throw DomainError("radial fraction must lie in [0, 1]");
    }
}

void require_theta(double theta) {
    if (!(theta >= 0.0) || !std::isfinite(theta)) {
        throw DomainError("dimensionless time must be finite and non-negative");
    }
}

// Bound on sum_{m > N} |a_m| exp(-mu_m^2 theta) given the first neglected
// zero mu and its weight |2 / (mu J1(mu))|. |J0| <= 1, weights decrease with
// m and mu_m^2 >= mu^2 + 2 mu g (m - N - 1), so the tail is dominated by a
// geometric series.
double tail_bound(double mu, double weight, double theta) noexcept {
    const double lead = weight * std::exp(-mu * mu * theta);
    const double one_minus_q = -std::expm1(-2.0 * mu * kMinZeroGap * theta);
    return lead / one_minus_q;
}

double asymptotic_weight(double mu) noexcept {
    // |J1(mu_n)| ~ sqrt(2 / (pi mu_n))
    return 2.0 / (mu * std::sqrt(2.0 / (std::numbers::pi * mu)));
}

}  // namespace

double theta(double diffusivity, double time, double radius) {
    if (!(diffusivity > 0.0) || !(radius > 0.0) || !(time >= 0.0) || !std::isfinite(time)) {
        throw DomainError("theta requires D > 0, R > 0 and t >= 0");
    }
    return diffusivity * time / (radius * radius);
}

namespace {

std::size_t terms_for(double theta, double tolerance) {
    // Smallest N with tail_bound(mu_{N+1}) < tolerance, searched on the
    // McMahon estimate and then confirmed on the exact zeros during summation.
    const double mu_needed = std::sqrt(std::log(1.0 / tolerance) / theta);
    std::size_t n = static_cast<std::size_t>(mu_needed / std::numbers::pi) + 1;
    while (n <= kMaxTerms + 1) {
        const double mu = bessel::j0_zero_estimate(n);
        if (tail_bound(mu, asymptotic_weight(mu), theta) < tolerance) break;
        n += std::max<std::size_t>(1, n / 16);
    }
    return n;
}

}  // namespace

std::size_t required_terms(double theta) {
    require_theta(theta);
    if (theta == 0.0) return 0;
    return terms_for(theta, kSeriesTolerance);
}

SeriesEvaluation evaluate_out_series(double r_frac, double theta) {
    require_r_frac(r_frac);
    require_theta(theta);
    if (theta == 0.0) return {1.0, 1.0, 0.0, 0};
    if (r_frac == 1.0) return {0.0, 0.0, 0.0, 0};

    const double target = terms_for(theta, kTailTarget) <= kMaxTerms ? kTailTarget : kSeriesTolerance;
    const std::size_t estimate = terms_for(theta, target);
    if (estimate > kMaxTerms) {
        const double mu = bessel::j0_zero_estimate(kMaxTerms + 1);
        std::ostringstream msg;
        msg << "series at theta=" << theta << " needs more than " << kMaxTerms
            << " terms; achievable tail bound " << tail_bound(mu, asymptotic_weight(mu), theta);
        throw ConvergenceError(msg.str());
    }

    auto table = bessel::BesselZeroTable::global().zeros(std::min(kMaxTerms, estimate + 8));
    long double sum = 0.0L;
    double bound = 0.0;
    std::size_t n = 0;
    for (;;) {
        if (n + 1 >= table->size()) {
            if (table->size() >= kMaxTerms) {
                if (bound < kSeriesTolerance) break;
                std::ostringstream msg;
                msg << "series at theta=" << theta << " did not reach tolerance within " << kMaxTerms
                    << " terms; achievable tail bound " << bound;
                throw ConvergenceError(msg.str());
            }
            table = bessel::BesselZeroTable::global().zeros(std::min(kMaxTerms, 2 * table->size()));
        }
        const auto& z = (*table)[n];
        const long double radial = r_frac == 0.0 ? 1.0L : bessel::j0_ext(z.mu_ext * r_frac);
        sum += z.coefficient_ext * radial * std::exp(-z.mu_ext * z.mu_ext * theta);
        ++n;
        const auto& next = (*table)[n];
        bound = tail_bound(next.mu, std::abs(next.coefficient), theta);
        if (bound < target) break;
    }
    const double raw = static_cast<double>(sum);
    return {std::clamp(raw, 0.0, 1.0), raw, bound, n};
}

double c_out(double r_frac, double theta) { return evaluate_out_series(r_frac, theta).value; }

double c_in(double r_frac, double theta) { return 1.0 - c_out(r_frac, theta); }

double concentration(double r_frac, double theta, Direction direction) {
    return direction == Direction::in_diffusion ? c_in(r_frac, theta) : c_out(r_frac, theta);
}

double invert_time(double target, double r_frac, Direction direction) {
    if (!(target > 0.0 && target < 1.0)) {
        throw DomainError("target fraction must lie strictly between 0 and 1");
    }
    if (!(r_frac >= 0.0 && r_frac <= 0.9)) {
        throw DomainError("time inversion supports radial fractions in [0, 0.9]");
    }
    // Work on the out-diffusion curve, which decreases monotonically in theta.
    const double level = direction == Direction::out_diffusion ? target : 1.0 - target;
    const auto f = [&](double log_theta) { return c_out(r_frac, std::exp(log_theta)) - level; };

    // Expand a decade bracket outwards from theta = 0.1 so tiny thetas, which
    // need many series terms, are only visited when the root is there.
    const double lo_limit = std::log(kThetaMin);
    const double hi_limit = std::log(kThetaMax);
    double a = std::log(0.1);
    double fa = f(a);
    double b = a;
    double fb = fa;
    const double step = std::log(10.0);
    if (fa > 0.0) {
        // concentration still above the level: root at larger theta
        while (fb > 0.0) {
            if (b >= hi_limit) throw ConvergenceError("could not bracket the time for this concentration");
            a = b;
            fa = fb;
            b = std::min(hi_limit, b + step);
            fb = f(b);
        }
    } else {
        while (fa < 0.0) {
            if (a <= lo_limit) throw ConvergenceError("could not bracket the time for this concentration");
            b = a;
            fb = fa;
            a = std::max(lo_limit, a - step);
            fa = f(a);
        }
    }
    const auto root = roots::brent(f, a, b, fa, fb, 1e-14, 0.05 * kInversionTolerance);
    return std::exp(root.x);
}

double scale_time(double time, double radius_from, double radius_to) {
    if (!(radius_from > 0.0) || !(radius_to > 0.0)) {
        throw DomainError("radii must be positive");
    }
    const double ratio = radius_to / radius_from;
    return time * (ratio * ratio);
}

double time_from_theta(double theta, double diffusivity, double radius) {
    if (!(diffusivity > 0.0) || !(radius > 0.0)) {
        throw DomainError("time conversion requires D > 0 and R > 0");
    }
    return theta * radius * radius / diffusivity;
}

}  // namespace h2plan::diffusion
