#include "pagamma/errors.hpp"
#include "pagamma/roots.hpp"

#include <doctest.h>

#include <cmath>

using namespace pagamma;

TEST_CASE("brent finds sqrt(2) with a tight bracket") {
    const auto r = brent([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-13);
    CHECK(std::fabs(r.root - std::sqrt(2.0)) < 1e-13);
    CHECK(r.lo <= std::sqrt(2.0) + 1e-15);
    CHECK(r.hi >= std::sqrt(2.0) - 1e-15);
    CHECK(r.width() <= 1e-13);
}

TEST_CASE("bisect halves down to the requested width") {
    const auto r = bisect([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-10);
    CHECK(r.width() <= 1e-10);
    CHECK(r.lo <= M_PI / 2);
    CHECK(r.hi >= M_PI / 2);
}

TEST_CASE("bisect_then_brent on a flat-then-steep function") {
    const auto f = [](double x) { return std::exp(10 * x) - 1e4; };
    const auto r = bisect_then_brent(f, 0.0, 5.0, 1e-3, 1e-12);
    CHECK(r.root == doctest::Approx(std::log(1e4) / 10).epsilon(1e-13));
    CHECK(r.width() <= 1e-12);
}

TEST_CASE("root finders reject brackets without a sign change") {
    const auto f = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(brent(f, -1.0, 1.0, 1e-12), SolverFailure);
    CHECK_THROWS_AS(bisect(f, -1.0, 1.0, 1e-12), SolverFailure);
}

TEST_CASE("exact zero at an endpoint") {
    const auto r = brent([](double x) { return x - 1.0; }, 1.0, 3.0, 1e-12);
    CHECK(r.root == 1.0);
    CHECK(r.width() == 0.0);
}
