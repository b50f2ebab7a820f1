#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casinet/quadrature.hpp"

using namespace casinet;
using doctest::Approx;

TEST_CASE("polynomials are integrated to machine precision") {
    auto f = [](double x) { return x * x; };
    const auto res = integrate_adaptive(f, 0.0, 1.0, 1e-12, 0.0, 100);
    CHECK(res.converged);
    CHECK(res.value == Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(res.panels == 1);  // G7K15 is exact for low-order polynomials
}

TEST_CASE("exponential decay over a wide interval") {
    auto f = [](double x) { return std::exp(-x); };
    const auto res = integrate_adaptive(f, 0.0, 70.0, 1e-10, 0.0, 200);
    CHECK(res.converged);
    CHECK(res.value == Approx(1.0).epsilon(1e-10));
    CHECK(res.error < 1e-9);
    CHECK(res.evaluations == 15 * (2 * res.panels - 1));
}

TEST_CASE("oscillatory integrand needs subdivisions but converges") {
    const double pi = 3.141592653589793;
    auto f = [](double x) { return std::sin(9.5 * x); };
    const auto res = integrate_adaptive(f, 0.0, pi, 1e-12, 0.0, 200);
    CHECK(res.converged);
    CHECK(res.value == Approx((1.0 - std::cos(9.5 * pi)) / 9.5).epsilon(1e-11));
}

TEST_CASE("budget exhaustion reports non-convergence with the partial sum") {
    // Near-singular integrand, hopeless budget.
    auto f = [](double x) { return 1.0 / std::sqrt(x); };
    const auto res = integrate_adaptive(f, 1e-30, 1.0, 1e-12, 0.0, 8);
    CHECK(!res.converged);
    CHECK(res.panels == 8);
    CHECK(res.value > 0.0);
}

TEST_CASE("zero integrand converges immediately") {
    auto f = [](double) { return 0.0; };
    const auto res = integrate_adaptive(f, 0.0, 1.0, 1e-12, 0.0, 10);
    CHECK(res.converged);
    CHECK(res.value == 0.0);
    CHECK(res.error == 0.0);
}

TEST_CASE("side channel integrates alongside the value") {
    auto f = [](double x) { return QuadSample{x, 2.0, 1}; };
    const auto res = integrate_adaptive(f, 0.0, 1.0, 1e-12, 0.0, 50);
    CHECK(res.value == Approx(0.5).epsilon(1e-14));
    CHECK(res.aux == Approx(2.0).epsilon(1e-13));
}

TEST_CASE("repeated runs are bit identical") {
    auto f = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
    const auto a = integrate_adaptive(f, 0.0, 10.0, 1e-11, 0.0, 200);
    const auto b = integrate_adaptive(f, 0.0, 10.0, 1e-11, 0.0, 200);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
    CHECK(a.evaluations == b.evaluations);
}
