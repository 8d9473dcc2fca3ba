#include "pagamma/theory.hpp"

#include "pagamma/errors.hpp"
#include "pagamma/roots.hpp"
#include "pagamma/specfun.hpp"

#include <string>

namespace pagamma {
namespace {

void check_args(const char* fn, double gamma, std::int64_t m) {
    if (!(gamma > 2.0 + kGammaLowerGuard)) {
        throw DomainError(std::string(fn) + ": gamma must exceed 2 + 1e-9, got " +
                          std::to_string(gamma));
    }
    if (m < 1) {
        throw DomainError(std::string(fn) + ": m must be >= 1, got " + std::to_string(m));
    }
}

} // namespace

double implicit_residual(double gamma, std::int64_t m) {
    check_args("implicit_residual", gamma, m);
    return 2.0 * static_cast<double>(m) * hurwitz_zeta(gamma, m) - hurwitz_zeta(gamma - 1.0, m);
}

double expected_degree(double gamma, std::int64_t m) {
    check_args("expected_degree", gamma, m);
    return hurwitz_zeta(gamma - 1.0, m) / hurwitz_zeta(gamma, m);
}

GammaSolution solve_gamma(std::int64_t m) {
    if (m < 1) {
        throw DomainError("solve_gamma: m must be >= 1, got " + std::to_string(m));
    }
    const auto residual = [m](double g) { return implicit_residual(g, m); };
    RootBracket r;
    try {
        r = bisect_then_brent(residual, kSolveLower, kSolveUpper, 1e-3, 0.5 * kSolveBracketWidth);
    } catch (const SolverFailure& e) {
        throw SolverFailure("solve_gamma(m=" + std::to_string(m) + "): " + e.what());
    }
    GammaSolution sol;
    sol.m = m;
    sol.gamma = r.root;
    sol.residual = r.f_root;
    sol.bracket = {r.lo, r.hi};
    return sol;
}

std::vector<GammaSolution> gamma_curve(std::span<const std::int64_t> m_values) {
    if (m_values.empty()) {
        throw DomainError("gamma_curve: m_values must be nonempty");
    }
    std::vector<GammaSolution> out;
    out.reserve(m_values.size());
    for (const std::int64_t m : m_values) {
        try {
            out.push_back(solve_gamma(m));
        } catch (const Error& e) {
            throw ExperimentError(e.kind(), "gamma_curve at m=" + std::to_string(m) + ": " + e.what());
        }
    }
    return out;
}

} // namespace pagamma
