#include "h2plan/bessel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "h2plan/error.hpp"

namespace h2plan::bessel {

namespace {

using std::numbers::pi;

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(name) + ": argument must be finite");
    }
}

// Double-double arithmetic for the power series: near the crossover the
// largest terms reach ~1e7 and cancel down to O(0.1).
struct Dd {
    double hi;
    double lo;
};

Dd two_sum(double a, double b) noexcept {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

Dd quick_two_sum(double a, double b) noexcept {
    const double s = a + b;
    return {s, b - (s - a)};
}

Dd add(Dd a, Dd b) noexcept {
    Dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

Dd mul(Dd a, Dd b) noexcept {
    const double p = a.hi * b.hi;
    const double e = std::fma(a.hi, b.hi, -p);
    return quick_two_sum(p, e + (a.hi * b.lo + a.lo * b.hi));
}

Dd div(Dd a, double d) noexcept {
    const double q1 = a.hi / d;
    const double p = q1 * d;
    const double e = std::fma(q1, d, -p);
    const double q2 = ((a.hi - p) - e + a.lo) / d;
    return quick_two_sum(q1, q2);
}

Dd to_dd(long double x) noexcept {
    const double hi = static_cast<double>(x);
    return {hi, static_cast<double>(x - hi)};
}

// sum_k (-1)^k (x/2)^(2k+order) / (k! (k+order)!)
long double power_series(long double x, int order) noexcept {
    const Dd xd = to_dd(x);
    const Dd q = mul(mul(xd, xd), Dd{-0.25, 0.0});
    Dd term = order == 0 ? Dd{1.0, 0.0} : mul(xd, Dd{0.5, 0.0});
    Dd sum = term;
    for (int k = 1; k < 200; ++k) {
        term = div(mul(term, q), static_cast<double>(k) * static_cast<double>(k + order));
        sum = add(sum, term);
        if (std::abs(term.hi) < 1e-36 && k > 0.5 * static_cast<double>(x)) break;
    }
    return static_cast<long double>(sum.hi) + static_cast<long double>(sum.lo);
}

// Hankel expansion: J_nu(x) ~ sqrt(2/(pi x)) (P cos chi - Q sin chi),
// chi = x - (nu/2 + 1/4) pi. Terms are summed until they stop shrinking.
long double hankel(long double x, int order) noexcept {
    const long double mu = 4.0L * order * order;
    const long double inv8x = 1.0L / (8.0L * x);
    long double p = 1.0L;
    long double q = 0.0L;
    long double a = 1.0L;  // a_k / (8x)^k with sign folded in below
    long double prev = 1.0L;
    for (int k = 1; k < 200; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        a *= (mu - odd * odd) * inv8x / k;
        const long double mag = std::abs(a);
        if (mag >= prev) break;
        // k = 1,2,3,... alternates into Q (odd k) and P (even k) with signs +, -, -, +, ...
        switch (k % 4) {
            case 1: q += a; break;
            case 2: p -= a; break;
            case 3: q -= a; break;
            case 0: p += a; break;
        }
        prev = mag;
        if (mag < 1e-21L) break;
    }
    const long double c = std::cos(x);
    const long double s = std::sin(x);
    const long double half_sqrt2 = 0.70710678118654752440084436210484903928L;
    // cos(x - pi/4) and sin(x - pi/4) for order 0; shift by -pi/2 for order 1.
    long double cos_chi = (c + s) * half_sqrt2;
    long double sin_chi = (s - c) * half_sqrt2;
    if (order == 1) {
        const long double tmp = cos_chi;
        cos_chi = sin_chi;
        sin_chi = -tmp;
    }
    const long double two_over_pi = 0.63661977236758134307553505349005744813L;
    return std::sqrt(two_over_pi / x) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double j0_series(double x) noexcept { return static_cast<double>(power_series(x, 0)); }
double j1_series(double x) noexcept { return static_cast<double>(power_series(x, 1)); }
double j0_asymptotic(double x) noexcept { return static_cast<double>(hankel(x, 0)); }
double j1_asymptotic(double x) noexcept { return static_cast<double>(hankel(x, 1)); }

long double j0_ext(long double x) {
    require_finite(static_cast<double>(x), "j0");
    x = std::abs(x);
    return x < kSeriesCrossover ? power_series(x, 0) : hankel(x, 0);
}

long double j1_ext(long double x) {
    require_finite(static_cast<double>(x), "j1");
    const long double ax = std::abs(x);
    const long double v = ax < kSeriesCrossover ? power_series(ax, 1) : hankel(ax, 1);
    return x < 0.0L ? -v : v;
}

double j0(double x) { return static_cast<double>(j0_ext(x)); }

double j1(double x) { return static_cast<double>(j1_ext(x)); }

double j0_zero_estimate(std::size_t n) noexcept {
    const double beta = (static_cast<double>(n) - 0.25) * pi;
    const double b = 1.0 / (8.0 * beta);
    const double b2 = b * b;
    return beta + b * (1.0 - b2 * (124.0 / 3.0 - b2 * (120928.0 / 15.0)));
}

namespace {

long double refine_zero(std::size_t n) {
    if (n < 1 || n > kMaxZeroIndex) {
        throw DomainError("j0_zero: index " + std::to_string(n) + " outside [1, 1000000]");
    }
    const long double dn = static_cast<long double>(n);
    const long double pi_l = std::numbers::pi_v<long double>;
    // Exactly one zero of J0 lies in [(n - 1/2) pi, n pi].
    long double lo = (dn - 0.5L) * pi_l;
    long double hi = dn * pi_l;
    long double f_lo = j0_ext(lo);
    long double x = j0_zero_estimate(n);
    for (int it = 0; it < 100; ++it) {
        const long double f = j0_ext(x);
        if (f == 0.0L) return x;
        if ((f > 0.0L) == (f_lo > 0.0L)) {
            lo = x;
            f_lo = f;
        } else {
            hi = x;
        }
        // J0' = -J1
        long double next = x + f / j1_ext(x);
        if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
        const long double step = std::abs(next - x);
        x = next;
        if (step <= 4.0L * std::numeric_limits<long double>::epsilon() * x) {
            break;
        }
    }
    if (!(std::abs(j0_ext(x)) < 1e-10L)) {
        throw ConvergenceError("j0_zero: refinement of zero " + std::to_string(n) + " did not converge");
    }
    return x;
}

}  // namespace

double j0_zero(std::size_t n) { return static_cast<double>(refine_zero(n)); }

ZeroEntry make_zero_entry(std::size_t n) {
    const long double mu = refine_zero(n);
    const long double j1mu = j1_ext(mu);
    const long double coefficient = 2.0L / (mu * j1mu);
    return {static_cast<double>(mu), static_cast<double>(j1mu), static_cast<double>(coefficient), mu, coefficient};
}

BesselZeroTable::Snapshot BesselZeroTable::zeros(std::size_t count) {
    if (count > kMaxZeroIndex) {
        throw DomainError("zero table limited to " + std::to_string(kMaxZeroIndex) + " entries");
    }
    Snapshot current = std::atomic_load(&table_);
    if (current->size() >= count) return current;

    static std::mutex grow_mutex;
    std::lock_guard lock(grow_mutex);
    current = std::atomic_load(&table_);
    if (current->size() >= count) return current;

    const std::size_t target = std::min(kMaxZeroIndex, std::max(count, 2 * current->size()));
    auto grown = std::make_shared<std::vector<ZeroEntry>>();
    grown->reserve(target);
    grown->assign(current->begin(), current->end());
    for (std::size_t n = grown->size() + 1; n <= target; ++n) {
        grown->push_back(make_zero_entry(n));
    }
    Snapshot published = std::move(grown);
    std::atomic_store(&table_, published);
    return published;
}

std::size_t BesselZeroTable::size() const { return std::atomic_load(&table_)->size(); }

BesselZeroTable& BesselZeroTable::global() {
    static BesselZeroTable table;
    return table;
}

}  // namespace h2plan::bessel
