#include "pagamma/fit.hpp"

#include "pagamma/errors.hpp"

#include <cmath>
#include <string>

namespace pagamma {
namespace {

constexpr std::size_t kMaxIterations = 200;
constexpr double kStepTolerance = 1e-12;

bool admissible(std::span<const FitPoint> points, double alpha) {
    for (const auto& p : points) {
        if (!(p.m + alpha > 0.0)) return false;
    }
    return true;
}

double residual_sum(std::span<const FitPoint> points, double alpha, double beta,
                    std::vector<double>* residuals) {
    double rss = 0.0;
    if (residuals) residuals->resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double r = points[i].gamma - eval_ansatz(points[i].m, alpha, beta);
        rss += r * r;
        if (residuals) (*residuals)[i] = r;
    }
    return rss;
}

struct Normal {
    double a11 = 0, a12 = 0, a22 = 0;  // J^T J
    double g1 = 0, g2 = 0;             // J^T r
};

Normal normal_equations(std::span<const FitPoint> points, double alpha, double beta) {
    Normal n;
    for (const auto& p : points) {
        const auto [ja, jb] = ansatz_gradient(p.m, alpha, beta);
        const double r = p.gamma - eval_ansatz(p.m, alpha, beta);
        n.a11 += ja * ja;
        n.a12 += ja * jb;
        n.a22 += jb * jb;
        n.g1 += ja * r;
        n.g2 += jb * r;
    }
    return n;
}

} // namespace

double eval_ansatz(double m, double alpha, double beta) {
    if (!(m + alpha > 0.0)) {
        throw DomainError("eval_ansatz: m + alpha must be positive, got " + std::to_string(m + alpha));
    }
    return kGammaAsymptote - std::pow(m + alpha, -beta);
}

std::array<double, 2> ansatz_gradient(double m, double alpha, double beta) {
    const double x = m + alpha;
    if (!(x > 0.0)) {
        throw DomainError("ansatz_gradient: m + alpha must be positive, got " + std::to_string(x));
    }
    const double p = std::pow(x, -beta);
    return {beta * p / x, std::log(x) * p};
}

FitResult fit_ansatz(std::span<const FitPoint> points) {
    if (points.size() < 3) {
        throw InsufficientPoints("fit_ansatz: need at least 3 points, got " +
                                 std::to_string(points.size()));
    }
    double sxy = 0.0, sxx = 0.0;
    for (const auto& p : points) {
        if (!(p.m > 0.0)) {
            throw DomainError("fit_ansatz: m must be positive, got " + std::to_string(p.m));
        }
        if (!(p.gamma < kGammaAsymptote)) {
            throw DomainError("fit_ansatz: gamma must lie below 3, got " + std::to_string(p.gamma));
        }
        const double x = -std::log(p.m + 1.0);
        const double y = std::log(kGammaAsymptote - p.gamma);
        sxy += x * y;
        sxx += x * x;
    }

    double alpha = 1.0;
    double beta = sxy / sxx;
    double rss = residual_sum(points, alpha, beta, nullptr);
    double lambda = 1e-3;

    std::size_t it = 0;
    for (;; ++it) {
        if (it == kMaxIterations) {
            throw SolverFailure("fit_ansatz: no convergence after 200 iterations");
        }
        const Normal n = normal_equations(points, alpha, beta);
        // Marquardt scaling of the diagonal
        const double d11 = n.a11 * (1.0 + lambda);
        const double d22 = n.a22 * (1.0 + lambda);
        const double det = d11 * d22 - n.a12 * n.a12;
        const double da = (d22 * n.g1 - n.a12 * n.g2) / det;
        const double db = (d11 * n.g2 - n.a12 * n.g1) / det;
        const double step = std::hypot(da, db);
        if (!std::isfinite(step)) {
            throw SolverFailure("fit_ansatz: singular normal equations");
        }
        if (step < kStepTolerance) break;

        const double trial_alpha = alpha + da;
        const double trial_beta = beta + db;
        if (admissible(points, trial_alpha)) {
            const double trial_rss = residual_sum(points, trial_alpha, trial_beta, nullptr);
            if (trial_rss < rss) {
                alpha = trial_alpha;
                beta = trial_beta;
                rss = trial_rss;
                lambda = std::max(lambda / 10.0, 1e-12);
                continue;
            }
        }
        lambda *= 10.0;
    }

    FitResult out;
    out.alpha = alpha;
    out.beta = beta;
    out.iterations = it;
    out.rss = residual_sum(points, alpha, beta, &out.residuals);

    const Normal n = normal_equations(points, alpha, beta);
    const double det = n.a11 * n.a22 - n.a12 * n.a12;
    if (points.size() > 2 && det > 0.0) {
        const double s2 = out.rss / static_cast<double>(points.size() - 2);
        out.alpha_stderr = std::sqrt(s2 * n.a22 / det);
        out.beta_stderr = std::sqrt(s2 * n.a11 / det);
    }
    return out;
}

} // namespace pagamma
