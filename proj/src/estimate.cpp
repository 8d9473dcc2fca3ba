#include "pagamma/estimate.hpp"

#include "pagamma/errors.hpp"
#include "pagamma/roots.hpp"
#include "pagamma/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pagamma {
namespace {

constexpr double kTailMass = 1e-12;
constexpr std::int64_t kMaxTable = std::int64_t{1} << 20;

} // namespace

double power_law_log_likelihood(double gamma, std::int64_t k_min, std::int64_t n,
                                double sum_log_k) {
    return -gamma * sum_log_k - static_cast<double>(n) * std::log(hurwitz_zeta(gamma, k_min));
}

GammaEstimate estimate_gamma(std::span<const std::int64_t> degrees, std::int64_t k_min) {
    if (k_min < 1) {
        throw DomainError("estimate_gamma: k_min must be >= 1, got " + std::to_string(k_min));
    }
    const auto hist = degree_histogram(degrees);
    std::int64_t n = 0;
    std::size_t distinct = 0;
    double sum_log = 0.0;
    for (auto it = hist.lower_bound(k_min); it != hist.end(); ++it) {
        n += it->second;
        ++distinct;
        sum_log += static_cast<double>(it->second) * std::log(static_cast<double>(it->first));
    }
    if (distinct < 2) {
        throw DegenerateInput("estimate_gamma: need at least two distinct degrees >= k_min=" +
                              std::to_string(k_min) + ", likelihood has no finite maximum");
    }

    const double mean_log = sum_log / static_cast<double>(n);
    const auto score = [&](double g) {
        return mean_log + hurwitz_zeta_ds(g, k_min) / hurwitz_zeta(g, k_min);
    };
    RootBracket r;
    try {
        r = brent(score, kEstimateLower, kEstimateUpper, 1e-12);
    } catch (const SolverFailure& e) {
        throw SolverFailure(std::string("estimate_gamma: MLE not inside (1, 20]: ") + e.what());
    }

    GammaEstimate est;
    est.gamma_hat = r.root;
    est.k_min = k_min;
    est.n_tail = n;
    est.log_likelihood = power_law_log_likelihood(r.root, k_min, n, sum_log);
    return est;
}

GammaEstimate estimate_gamma(const DegreeSequence& seq) {
    return estimate_gamma(seq.degrees, seq.params.m);
}

double estimate_gamma_loglog(std::span<const std::int64_t> degrees, std::int64_t k_min) {
    const auto hist = degree_histogram(degrees);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double bins = 0;
    for (auto it = hist.lower_bound(k_min); it != hist.end(); ++it) {
        const double x = std::log(static_cast<double>(it->first));
        const double y = std::log(static_cast<double>(it->second));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        bins += 1;
    }
    if (bins < 2) {
        throw DegenerateInput("estimate_gamma_loglog: need at least two histogram bins");
    }
    const double slope = (bins * sxy - sx * sy) / (bins * sxx - sx * sx);
    return -slope;
}

PowerLawSampler::PowerLawSampler(double gamma, std::int64_t k_min)
    : gamma_(gamma), k_min_(k_min) {
    if (!(gamma > kEstimateLower)) {
        throw DomainError("sample_power_law: gamma must exceed 1 + 1e-6, got " +
                          std::to_string(gamma));
    }
    if (k_min < 1) {
        throw DomainError("sample_power_law: k_min must be >= 1, got " + std::to_string(k_min));
    }
    norm_ = hurwitz_zeta(gamma, k_min);

    // smallest K (by doubling the span) with zeta(gamma, K+1) / norm < 1e-12
    std::int64_t span = 1;
    while (span < kMaxTable && hurwitz_zeta(gamma, k_min + span) / norm_ >= kTailMass) {
        span *= 2;
    }
    span = std::min(span, kMaxTable);

    cdf_.resize(static_cast<std::size_t>(span));
    double acc = 0.0, comp = 0.0;
    for (std::int64_t i = 0; i < span; ++i) {
        const double term = std::pow(static_cast<double>(k_min + i), -gamma) / norm_ - comp;
        const double t = acc + term;
        comp = (t - acc) - term;
        acc = t;
        cdf_[static_cast<std::size_t>(i)] = acc;
    }
}

std::int64_t PowerLawSampler::operator()(Rng& rng) const {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it != cdf_.end()) {
        return k_min_ + (it - cdf_.begin());
    }
    return sample_tail(u);
}

// Smallest k beyond the table with P(K <= k) > u, i.e.
// zeta(gamma, k + 1) < (1 - u) * norm.
std::int64_t PowerLawSampler::sample_tail(double u) const {
    const double target = (1.0 - u) * norm_;
    const auto above = [&](std::int64_t k) { return hurwitz_zeta(gamma_, k + 1) < target; };
    std::int64_t lo = table_end();  // not above
    std::int64_t step = 1;
    std::int64_t hi = lo + step;
    constexpr std::int64_t kCeiling = std::int64_t{1} << 62;
    while (!above(hi)) {
        lo = hi;
        if (step > kCeiling / 4) return hi;
        step *= 2;
        hi = lo + step;
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (above(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

std::vector<std::int64_t> sample_power_law(double gamma, std::int64_t k_min, std::int64_t n,
                                           std::uint64_t seed) {
    const PowerLawSampler sampler(gamma, k_min);
    Rng rng(seed);
    std::vector<std::int64_t> out(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    for (auto& k : out) k = sampler(rng);
    return out;
}

} // namespace pagamma
