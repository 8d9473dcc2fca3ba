#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pagamma {

/// Smallest gamma - 2 accepted by the residual and expected degree: the
/// k^{1-gamma} sum needs gamma - 1 > 1.
inline constexpr double kGammaLowerGuard = 1e-9;

/// Solver search interval and tolerance for the exponent root.
inline constexpr double kSolveLower = 2.0 + 1e-6;
inline constexpr double kSolveUpper = 3.5;
inline constexpr double kSolveBracketWidth = 1e-12;

/// Root of the implicit exponent equation for one value of m.
struct GammaSolution {
    std::int64_t m = 0;
    double gamma = 0.0;
    /// implicit_residual(gamma, m)
    double residual = 0.0;
    /// final bracket around the root
    std::pair<double, double> bracket{0.0, 0.0};
};

/// F(gamma, m) = sum_{k>=m} (2m - k) k^{-gamma}
///             = 2m zeta(gamma, m) - zeta(gamma - 1, m).
///
/// Zero exactly when the truncated power law k^{-gamma}, k >= m, has mean 2m.
/// Throws DomainError for gamma <= 2 + 1e-9 or m < 1.
double implicit_residual(double gamma, std::int64_t m);

/// Mean of the truncated power law: zeta(gamma - 1, m) / zeta(gamma, m).
double expected_degree(double gamma, std::int64_t m);

/// Exponent gamma(m) with expected_degree(gamma, m) == 2m. Bisection from
/// [2 + 1e-6, 3.5] followed by Brent refinement to a 1e-12 bracket.
/// Throws SolverFailure if the initial bracket has no sign change.
GammaSolution solve_gamma(std::int64_t m);

/// solve_gamma for each m, order preserved. Errors carry the offending m.
std::vector<GammaSolution> gamma_curve(std::span<const std::int64_t> m_values);

} // namespace pagamma
