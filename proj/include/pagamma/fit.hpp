#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace pagamma {

/// Asymptote of the exponent curve; held fixed, not fitted.
inline constexpr double kGammaAsymptote = 3.0;

struct FitPoint {
    double m = 0.0;
    double gamma = 0.0;
};

struct FitResult {
    double alpha = 0.0;
    double beta = 0.0;
    double rss = 0.0;
    /// gamma_i - eval_ansatz(m_i, alpha, beta)
    std::vector<double> residuals;
    std::size_t iterations = 0;
    /// Asymptotic standard errors from rss / (n - 2) * (J^T J)^{-1}.
    double alpha_stderr = 0.0;
    double beta_stderr = 0.0;
};

/// 3 - (m + alpha)^{-beta}. Throws DomainError if m + alpha <= 0.
double eval_ansatz(double m, double alpha, double beta);

/// (d/dalpha, d/dbeta) of eval_ansatz:
/// (beta (m+alpha)^{-beta-1}, ln(m+alpha) (m+alpha)^{-beta}).
std::array<double, 2> ansatz_gradient(double m, double alpha, double beta);

/// Unweighted least-squares fit of eval_ansatz to the points by
/// Levenberg-Marquardt with the analytic Jacobian.
///
/// Start: alpha = 1 and beta from the origin-constrained regression of
/// ln(3 - gamma_i) on -ln(m_i + 1). Stops when a step is shorter than 1e-12.
/// Throws InsufficientPoints for fewer than 3 points, DomainError if any
/// gamma >= 3 or m <= 0, SolverFailure after 200 iterations.
FitResult fit_ansatz(std::span<const FitPoint> points);

} // namespace pagamma
