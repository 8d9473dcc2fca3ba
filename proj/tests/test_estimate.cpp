#include "oracles.hpp"

#include "pagamma/errors.hpp"
#include "pagamma/estimate.hpp"
#include "pagamma/specfun.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace pagamma;

TEST_CASE("MLE recovers the exponent of exact power-law samples") {
    const auto ks = sample_power_law(2.5, 1, 100'000, 11);
    const GammaEstimate e = estimate_gamma(ks, 1);
    CHECK(e.gamma_hat >= 2.48);
    CHECK(e.gamma_hat <= 2.52);
    CHECK(e.k_min == 1);
    CHECK(e.n_tail == 100'000);
}

TEST_CASE("estimator consistency over a (gamma, k_min) grid") {
    constexpr std::int64_t n = 100'000;
    std::uint64_t seed = 100;
    for (const double gamma : {2.2, 2.5, 2.9}) {
        for (const std::int64_t k_min : {1, 3, 10}) {
            const auto ks = sample_power_law(gamma, k_min, n, seed++);
            const double g = estimate_gamma(ks, k_min).gamma_hat;
            CAPTURE(gamma);
            CAPTURE(k_min);
            CHECK(std::fabs(g - gamma) <= 5 * (gamma - 1) / std::sqrt(static_cast<double>(n)));
        }
    }
}

TEST_CASE("degenerate and unsolvable inputs") {
    const std::vector<std::int64_t> equal(100, 4);
    CHECK_THROWS_AS(estimate_gamma(equal, 4), DegenerateInput);
    const std::vector<std::int64_t> one{7};
    CHECK_THROWS_AS(estimate_gamma(one, 1), DegenerateInput);
    // a single value above k_min counts as degenerate too
    const std::vector<std::int64_t> below{1, 2, 5, 5};
    CHECK_THROWS_AS(estimate_gamma(below, 5), DegenerateInput);
    // mean log barely above ln(k_min): MLE beyond gamma = 20
    std::vector<std::int64_t> steep(4'000'000, 1);
    steep.push_back(2);
    CHECK_THROWS_AS(estimate_gamma(steep, 1), SolverFailure);
    CHECK_THROWS_AS(estimate_gamma(steep, 0), DomainError);
}

TEST_CASE("two-point sample agrees with a grid maximizer of the likelihood") {
    const std::vector<std::int64_t> ks{1, 2};
    const GammaEstimate e = estimate_gamma(ks, 1);

    // Exhaustive grid over (1, 20] in steps of 1e-4. The normalizer uses
    // hurwitz_zeta, checked on its own in test_specfun; the search itself
    // never touches the score equation.
    double best_g = 0.0, best_ll = -INFINITY;
    for (int i = 1; i <= 190'000; ++i) {
        const double g = 1.0 + 1e-4 * i;
        const double ll = -g * std::log(2.0) - 2.0 * std::log(hurwitz_zeta(g, 1));
        if (ll > best_ll) {
            best_ll = ll;
            best_g = g;
        }
    }
    CHECK(std::fabs(e.gamma_hat - best_g) <= 1e-3);
    CHECK(e.log_likelihood == doctest::Approx(best_ll).epsilon(1e-8));
    // normalizer from brute-force summation
    CHECK(e.log_likelihood == doctest::Approx(oracle::log_likelihood(e.gamma_hat, 1, ks)).epsilon(1e-9));
}

TEST_CASE("log-likelihood is a local maximum at the estimate") {
    for (const std::uint64_t seed : {1u, 2u, 3u}) {
        const auto ks = sample_power_law(2.7, 2, 20'000, seed);
        const GammaEstimate e = estimate_gamma(ks, 2);
        double sum_log = 0.0;
        for (const auto k : ks) sum_log += std::log(static_cast<double>(k));
        const auto ll = [&](double g) { return power_law_log_likelihood(g, 2, e.n_tail, sum_log); };
        CHECK(ll(e.gamma_hat) >= ll(e.gamma_hat + 0.01));
        CHECK(ll(e.gamma_hat) >= ll(e.gamma_hat - 0.01));
    }
}

TEST_CASE("estimate is invariant under permutation") {
    auto ks = sample_power_law(2.4, 1, 50'000, 77);
    const GammaEstimate a = estimate_gamma(ks, 1);
    std::mt19937_64 gen(5);
    for (int i = 0; i < 3; ++i) {
        std::shuffle(ks.begin(), ks.end(), gen);
        const GammaEstimate b = estimate_gamma(ks, 1);
        CHECK(a.gamma_hat == b.gamma_hat);
        CHECK(a.log_likelihood == b.log_likelihood);
    }
}

TEST_CASE("observations below k_min are ignored") {
    auto ks = sample_power_law(2.6, 4, 10'000, 8);
    const GammaEstimate clean = estimate_gamma(ks, 4);
    ks.insert(ks.end(), {1, 2, 3, 3});
    const GammaEstimate noisy = estimate_gamma(ks, 4);
    CHECK(noisy.n_tail == clean.n_tail);
    CHECK(noisy.gamma_hat == clean.gamma_hat);
}

TEST_CASE("sample_power_law") {
    SUBCASE("P(1) at gamma = 3") {
        const auto ks = sample_power_law(3.0, 1, 1'000'000, 3);
        const double p = 1.0 / 1.2020569031595943;
        const auto ones = std::count(ks.begin(), ks.end(), 1);
        const double sigma = std::sqrt(1e6 * p * (1 - p));
        CHECK(std::fabs(static_cast<double>(ones) - 1e6 * p) <= 3 * sigma);
    }
    SUBCASE("support starts at k_min") {
        const auto ks = sample_power_law(2.5, 5, 50'000, 9);
        CHECK(*std::min_element(ks.begin(), ks.end()) >= 5);
    }
    SUBCASE("deterministic in the seed") {
        CHECK(sample_power_law(2.2, 2, 1000, 42) == sample_power_law(2.2, 2, 1000, 42));
        CHECK(sample_power_law(2.2, 2, 1000, 42) != sample_power_law(2.2, 2, 1000, 43));
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(sample_power_law(1.0, 1, 10, 1), DomainError);
        CHECK_THROWS_AS(sample_power_law(0.5, 1, 10, 1), DomainError);
        CHECK_THROWS_AS(sample_power_law(2.0, 0, 10, 1), DomainError);
    }
    SUBCASE("heavy tail beyond the CDF table") {
        // at gamma = 1.5 the table is capped and ~7.5e-4 of the mass lies past it
        const PowerLawSampler sampler(1.5, 1);
        const std::int64_t edge = sampler.table_end();
        const double p_tail = hurwitz_zeta(1.5, edge + 1) / hurwitz_zeta(1.5, 1);
        const auto ks = sample_power_law(1.5, 1, 200'000, 10);
        const auto beyond = std::count_if(ks.begin(), ks.end(), [&](auto k) { return k > edge; });
        const double n = 2e5;
        CHECK(std::fabs(static_cast<double>(beyond) - n * p_tail) <= 3 * std::sqrt(n * p_tail * (1 - p_tail)));
        // tail draws respect the exact CDF: P(K > 4 edge) / P(K > edge)
        const double p_far = hurwitz_zeta(1.5, 4 * edge + 1) / hurwitz_zeta(1.5, edge + 1);
        const auto far = std::count_if(ks.begin(), ks.end(), [&](auto k) { return k > 4 * edge; });
        const double nb = static_cast<double>(beyond);
        CHECK(std::fabs(static_cast<double>(far) - nb * p_far) <= 3 * std::sqrt(nb * p_far * (1 - p_far)) + 1);
    }
}

TEST_CASE("log-log regression runs and is biased low on exact samples") {
    const auto ks = sample_power_law(2.5, 1, 100'000, 12);
    const double g = estimate_gamma_loglog(ks, 1);
    CHECK(g > 1.0);
    CHECK(g < 2.5);
    const std::vector<std::int64_t> single{3, 3, 3};
    CHECK_THROWS_AS(estimate_gamma_loglog(single, 1), DegenerateInput);
}
