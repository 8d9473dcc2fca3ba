#pragma once

#include "pagamma/netgen.hpp"
#include "pagamma/random.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pagamma {

/// Search interval for the maximum-likelihood exponent.
inline constexpr double kEstimateLower = 1.0 + 1e-6;
inline constexpr double kEstimateUpper = 20.0;

struct GammaEstimate {
    double gamma_hat = 0.0;
    std::int64_t k_min = 0;
    std::int64_t n_tail = 0;  ///< observations with k >= k_min
    double log_likelihood = 0.0;
};

/// Log-likelihood of n observations with sum_log_k = sum ln k_i under the
/// discrete power law P(k) = k^{-gamma} / zeta(gamma, k_min), k >= k_min.
double power_law_log_likelihood(double gamma, std::int64_t k_min, std::int64_t n,
                                double sum_log_k);

/// Discrete power-law MLE with known lower cutoff. Solves the score equation
///
///     mean(ln k) = -zeta'(gamma, k_min) / zeta(gamma, k_min)
///
/// with Brent on (1 + 1e-6, 20]. zeta' is the analytic log-weighted Hurwitz
/// sum (hurwitz_zeta_ds). Observations below k_min are ignored, and the log
/// sum is accumulated over sorted distinct degrees so the result does not
/// depend on input order.
///
/// Throws DegenerateInput when fewer than two distinct degrees are >= k_min
/// and SolverFailure when the root is not inside the search interval.
GammaEstimate estimate_gamma(std::span<const std::int64_t> degrees, std::int64_t k_min);

/// estimate_gamma with k_min = seq.params.m.
GammaEstimate estimate_gamma(const DegreeSequence& seq);

/// Least-squares slope of ln(frequency) against ln(k) over nonempty histogram
/// bins with k >= k_min. Biased; kept only for side-by-side comparison.
double estimate_gamma_loglog(std::span<const std::int64_t> degrees, std::int64_t k_min);

/// Exact inverse-CDF sampler for P(k) = k^{-gamma} / zeta(gamma, k_min).
///
/// The CDF is tabulated from k_min up to the first K whose remaining mass is
/// below 1e-12 (at most 2^20 entries). Draws that land beyond the table are
/// resolved by searching the Hurwitz tail directly, so the support is not
/// truncated.
class PowerLawSampler {
public:
    /// Throws DomainError unless gamma > 1 + 1e-6 and k_min >= 1.
    PowerLawSampler(double gamma, std::int64_t k_min);

    std::int64_t operator()(Rng& rng) const;

    std::int64_t table_end() const { return k_min_ + static_cast<std::int64_t>(cdf_.size()) - 1; }

private:
    std::int64_t sample_tail(double u) const;

    double gamma_;
    std::int64_t k_min_;
    double norm_;
    std::vector<double> cdf_;
};

/// n i.i.d. draws from PowerLawSampler(gamma, k_min), seeded with `seed`.
std::vector<std::int64_t> sample_power_law(double gamma, std::int64_t k_min, std::int64_t n,
                                           std::uint64_t seed);

} // namespace pagamma
