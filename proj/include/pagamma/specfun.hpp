#pragma once

#include <cstdint>

namespace pagamma {

/// Distance above the pole at s = 1 below which zeta evaluation is refused.
inline constexpr double kZetaPoleGuard = 1e-9;

/// Arguments of a Hurwitz zeta evaluation, sum_{k=a}^inf k^{-s}.
struct ZetaQuery {
    double s;
    std::int64_t a;
};

/// Hurwitz zeta at integer offset: sum_{k=a}^inf k^{-s}.
///
/// Terms below M = max(a, 20) are summed directly with compensated
/// accumulation; the remainder is the Euler-Maclaurin expansion
///
///     M^{1-s}/(s-1) + M^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} M^{1-s-2j}
///
/// with correction terms added until they drop below double resolution.
/// If the asymptotic series stops shrinking before that, M is doubled.
/// Absolute error is below 1e-13 wherever the result is O(1) or smaller;
/// close to the pole the error is a few ulps of the (large) result.
///
/// Throws DomainError if s <= 1 + kZetaPoleGuard or a < 1.
double hurwitz_zeta(double s, std::int64_t a);
double hurwitz_zeta(const ZetaQuery& q);

/// d/ds of hurwitz_zeta(s, a), i.e. -sum_{k=a}^inf ln(k) k^{-s}, obtained
/// by differentiating the same Euler-Maclaurin expansion term by term.
double hurwitz_zeta_ds(double s, std::int64_t a);

/// sum_{k=a}^{b} k^{-s}. Any real s is allowed; a == b + 1 gives the empty
/// sum 0. Throws DomainError if a < 1 or a > b + 1.
double truncated_power_sum(double s, std::int64_t a, std::int64_t b);

} // namespace pagamma
