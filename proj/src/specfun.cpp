#include "pagamma/specfun.hpp"

#include "pagamma/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace pagamma {
namespace {

// B_{2j} / (2j)! for j = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1124000727777607680000.0,
    -236364091.0 / 2730.0 / 620448401733239439360000.0,
};

constexpr std::int64_t kMinDirectTerms = 20;

class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void check_domain(double s, std::int64_t a) {
    if (!(s > 1.0 + kZetaPoleGuard)) {
        throw DomainError("hurwitz_zeta: s must exceed 1 + 1e-9, got s=" + std::to_string(s));
    }
    if (a < 1) {
        throw DomainError("hurwitz_zeta: a must be >= 1, got a=" + std::to_string(a));
    }
}

struct TailResult {
    double value;
    bool converged;
};

// Euler-Maclaurin remainder sum_{k=M}^inf k^{-s}.
TailResult zeta_tail(double s, double big_m) {
    const double log_m = std::log(big_m);
    const double m_pow = std::exp(-s * log_m);  // M^{-s}
    double value = big_m * m_pow / (s - 1.0) + 0.5 * m_pow;

    const double inv_m2 = 1.0 / (big_m * big_m);
    double rising = s;                // (s)_{2j-1}
    double power = m_pow / big_m;     // M^{-s-2j+1}
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
        if (j > 0) {
            const double lo = s + 2.0 * static_cast<double>(j) - 1.0;
            rising *= lo * (lo + 1.0);
            power *= inv_m2;
        }
        const double term = kBernoulliOverFactorial[j] * rising * power;
        const double mag = std::fabs(term);
        if (mag > prev) {
            return {value, false};
        }
        value += term;
        if (mag <= 0.25 * std::numeric_limits<double>::epsilon() * std::fabs(value)) {
            return {value, true};
        }
        prev = mag;
    }
    return {value, false};
}

// Derivative in s of zeta_tail.
TailResult zeta_tail_ds(double s, double big_m) {
    const double log_m = std::log(big_m);
    const double m_pow = std::exp(-s * log_m);
    const double sm1 = s - 1.0;
    double value = -big_m * m_pow * (log_m / sm1 + 1.0 / (sm1 * sm1)) - 0.5 * log_m * m_pow;

    const double inv_m2 = 1.0 / (big_m * big_m);
    double rising = s;
    double log_rising_ds = 1.0 / s;  // d/ds ln (s)_{2j-1}
    double power = m_pow / big_m;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
        if (j > 0) {
            const double lo = s + 2.0 * static_cast<double>(j) - 1.0;
            const double hi = lo + 1.0;
            rising *= lo * hi;
            log_rising_ds += 1.0 / lo + 1.0 / hi;
            power *= inv_m2;
        }
        const double base = kBernoulliOverFactorial[j] * rising * power;
        const double term = base * (log_rising_ds - log_m);
        // the log factor can pass through zero, so bound it instead
        const double mag = std::fabs(base) * (std::fabs(log_rising_ds) + log_m);
        if (mag > prev) {
            return {value, false};
        }
        value += term;
        if (mag <= 0.25 * std::numeric_limits<double>::epsilon() * std::fabs(value)) {
            return {value, true};
        }
        prev = mag;
    }
    return {value, false};
}

template <class Tail, class Term>
double euler_maclaurin(double s, std::int64_t a, Tail tail, Term term) {
    std::int64_t big_m = std::max(a, kMinDirectTerms);
    KahanSum head;
    std::int64_t k = a;
    for (;;) {
        for (; k < big_m; ++k) {
            head.add(term(static_cast<double>(k)));
        }
        const TailResult t = tail(s, static_cast<double>(big_m));
        if (t.converged || big_m > (std::int64_t{1} << 40)) {
            return head.value() + t.value;
        }
        big_m *= 2;
    }
}

} // namespace

double hurwitz_zeta(double s, std::int64_t a) {
    check_domain(s, a);
    return euler_maclaurin(s, a, zeta_tail, [s](double k) { return std::pow(k, -s); });
}

double hurwitz_zeta(const ZetaQuery& q) { return hurwitz_zeta(q.s, q.a); }

double hurwitz_zeta_ds(double s, std::int64_t a) {
    check_domain(s, a);
    return euler_maclaurin(s, a, zeta_tail_ds,
                           [s](double k) { return -std::log(k) * std::pow(k, -s); });
}

double truncated_power_sum(double s, std::int64_t a, std::int64_t b) {
    if (a < 1) {
        throw DomainError("truncated_power_sum: a must be >= 1, got a=" + std::to_string(a));
    }
    if (a > b + 1) {
        throw DomainError("truncated_power_sum: need a <= b + 1, got a=" + std::to_string(a) +
                          " b=" + std::to_string(b));
    }
    KahanSum sum;
    for (std::int64_t k = a; k <= b; ++k) {
        sum.add(std::pow(static_cast<double>(k), -s));
    }
    return sum.value();
}

} // namespace pagamma
