#pragma once

/**
 * @file bessel.hpp
 * @brief Bessel functions J0, J1 of the first kind and the positive zeros of J0.
 *
 * Small arguments use the ascending power series, large arguments the Hankel
 * asymptotic expansion in amplitude/phase form. The two branches meet at
 * kSeriesCrossover where they agree to well below 1e-10.
 */

#include <cstddef>
#include <memory>
#include <vector>

namespace h2plan::bessel {

inline constexpr double kSeriesCrossover = 20.0;
inline constexpr std::size_t kMaxZeroIndex = 1'000'000;

/// J0(x). Even in x; throws DomainError for non-finite input.
[[nodiscard]] double j0(double x);
/// J1(x). Odd in x; throws DomainError for non-finite input.
[[nodiscard]] double j1(double x);

/// Extended-precision evaluations used where results are summed in long double.
[[nodiscard]] long double j0_ext(long double x);
[[nodiscard]] long double j1_ext(long double x);

/// Branch-level access, exposed so the seam can be tested.
[[nodiscard]] double j0_series(double x) noexcept;
[[nodiscard]] double j1_series(double x) noexcept;
[[nodiscard]] double j0_asymptotic(double x) noexcept;
[[nodiscard]] double j1_asymptotic(double x) noexcept;

/// McMahon's expansion for the n-th zero of J0, used as the Newton seed.
[[nodiscard]] double j0_zero_estimate(std::size_t n) noexcept;

/// n-th positive zero of J0 (n >= 1). Throws DomainError if n is out of
/// [1, kMaxZeroIndex] and ConvergenceError if refinement fails.
[[nodiscard]] double j0_zero(std::size_t n);

struct ZeroEntry {
    double mu;            ///< n-th zero of J0
    double j1_at_mu;      ///< J1(mu)
    double coefficient;   ///< 2 / (mu J1(mu)), the Fourier-Bessel weight of a unit initial profile
    long double mu_ext;           ///< mu in extended precision
    long double coefficient_ext;  ///< coefficient in extended precision
};

/**
 * Memoized table of J0 zeros.
 *
 * Readers receive an immutable snapshot; growing the table publishes a new
 * snapshot, so handed-out snapshots stay valid. Entries do not depend on fill
 * order, so concurrent first fills produce identical tables.
 */
class BesselZeroTable {
public:
    using Snapshot = std::shared_ptr<const std::vector<ZeroEntry>>;

    /// Snapshot holding at least `count` zeros (count <= kMaxZeroIndex).
    [[nodiscard]] Snapshot zeros(std::size_t count);
    [[nodiscard]] std::size_t size() const;

    static BesselZeroTable& global();

private:
    mutable std::shared_ptr<const std::vector<ZeroEntry>> table_ = std::make_shared<std::vector<ZeroEntry>>();
};

[[nodiscard]] ZeroEntry make_zero_entry(std::size_t n);

}  // namespace h2plan::bessel
