#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "hhb/errors.hpp"
#include "hhb/quad.hpp"
#include "hhb/specfun.hpp"
#include "oracles.hpp"

using namespace hhb;

TEST_CASE("integrate examples") {
    const auto sq = integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(sq.value - 1.0 / 3.0) < 1e-15);
    CHECK(sq.err_estimate >= 0.0);
    CHECK(sq.subdivisions >= 1);

    const auto kernel = integrate([](double t) { return t - t * t; }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(kernel.value - 1.0 / 6.0) < 1e-15);

    const auto k2 = integrate([](double t) { return (t - t * t) * (t - t * t); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(k2.value - 1.0 / 30.0) < 1e-13);
    CHECK(std::abs(k2.value - beta(3.0, 3.0)) < 1e-13);
}

TEST_CASE("cubic polynomials are integrated exactly") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> end(-1.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const long double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
        double lo = end(rng), hi = end(rng);
        if (lo > hi) std::swap(lo, hi);
        if (hi - lo < 0.01) hi = lo + 0.5;
        auto prim = [&](long double x) {
            return c0 * x + c1 * x * x / 2 + c2 * x * x * x / 3 + c3 * x * x * x * x / 4;
        };
        const double exact = static_cast<double>(prim(hi) - prim(lo));
        // Loose tolerance: Simpson is exact on cubics regardless of tol.
        auto f = [&](double x) {
            return static_cast<double>(c0 + x * (c1 + x * (c2 + x * c3)));
        };
        const auto r = integrate(f, lo, hi, 1e-2);
        CHECK(std::abs(r.value - exact) <= 1e-13);
    }
}

TEST_CASE("linearity on random polynomial pairs") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    const double tol = 1e-10;
    for (int trial = 0; trial < 30; ++trial) {
        double p[6], r[6];
        for (int i = 0; i < 6; ++i) {
            p[i] = coef(rng);
            r[i] = coef(rng);
        }
        auto poly = [](const double* c) {
            return [c](double x) {
                double s = 0.0;
                for (int i = 5; i >= 0; --i) s = s * x + c[i];
                return s;
            };
        };
        const double wa = coef(rng), wb = coef(rng);
        const auto f = poly(p);
        const auto g = poly(r);
        const double combined = integrate([&](double x) { return wa * f(x) + wb * g(x); }, -1.0, 2.0, tol).value;
        const double split = wa * integrate(f, -1.0, 2.0, tol).value + wb * integrate(g, -1.0, 2.0, tol).value;
        CHECK(std::abs(combined - split) <= 2.0 * tol * std::max({1.0, std::abs(wa), std::abs(wb)}));
    }
}

TEST_CASE("error estimate is honest on the analytic set") {
    struct Case {
        RealFn f;
        double exact;
    };
    const Case cases[] = {
        {[](double x) { return x * x; }, 1.0 / 3.0},
        {[](double x) { return std::exp(x); }, std::exp(1.0) - 1.0},
        {[](double t) { return t - t * t; }, 1.0 / 6.0},
        {[](double t) { return std::pow(t - t * t, 1.5); }, static_cast<double>(oracle::beta_by_recurrence(2.5, 2.5))},
        {[](double t) { return std::pow(t - t * t, 2.0); }, 1.0 / 30.0},
        {[](double t) { return std::pow(t - t * t, 3.0); }, 1.0 / 140.0},
    };
    for (double tol : {1e-6, 1e-9, 1e-12}) {
        for (const auto& c : cases) {
            const auto r = integrate(c.f, 0.0, 1.0, tol);
            CHECK(std::abs(r.value - c.exact) <= 10.0 * r.err_estimate);
            CHECK(std::abs(r.value - c.exact) <= std::max(tol, r.err_estimate));
        }
    }
}

TEST_CASE("agrees with an independent Gauss-Legendre rule") {
    auto f = [](double x) { return std::pow(x, 2.25) * std::exp(-x) + std::sin(3 * x); };
    const double ref = oracle::gauss_legendre(f, 0.0, 2.0, 4000);
    CHECK(std::abs(integrate(f, 0.0, 2.0, 1e-12).value - ref) < 1e-11);
}

TEST_CASE("deterministic across calls") {
    auto f = [](double x) { return std::pow(x, 2.25) * std::cos(x); };
    const auto a = integrate(f, 0.0, 3.0, 1e-11);
    const auto b = integrate(f, 0.0, 3.0, 1e-11);
    CHECK(a.value == b.value);
    CHECK(a.err_estimate == b.err_estimate);
    CHECK(a.subdivisions == b.subdivisions);
}

TEST_CASE("integrate errors") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate(one, 1.0, 1.0), ParameterError);
    CHECK_THROWS_AS(integrate(one, 2.0, 1.0), ParameterError);
    CHECK_THROWS_AS(integrate(one, 0.0, 1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(integrate(one, 0.0, 1.0, -1.0), ParameterError);

    try {
        integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0);
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(e.abscissa() == 0.5);
    }
}

TEST_CASE("depth exhaustion reports a convergence error with the best estimate") {
    // 1/sqrt(x) is integrable but its singular leaf never meets a tiny tolerance.
    auto f = [](double x) { return x == 0.0 ? 0.0 : 1.0 / std::sqrt(x); };
    try {
        integrate(f, 0.0, 1.0, 1e-14);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.best().value));
        CHECK(e.best().subdivisions >= 1);
        CHECK(std::abs(e.best().value - 2.0) < 1e-3);
    }
}

TEST_CASE("integrate_kernel examples") {
    auto zero = [](double) { return 0.0; };
    auto two = [](double) { return 2.0; };
    auto ident = [](double x) { return x; };
    CHECK(integrate_kernel(zero, 0.0, 1.0, 1.0).value == 0.0);
    CHECK(std::abs(integrate_kernel(two, 0.0, 1.0, 1.0).value - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(integrate_kernel(two, 0.3, 1.7, 0.6).value - 1.0 / 3.0) < 1e-15);
    const double b23 = beta(2.0, 3.0);
    CHECK(std::abs(integrate_kernel(ident, 0.0, 1.0, 1.0, 1e-12).value - 1.0 / 12.0) < 1e-15);
    CHECK(std::abs(integrate_kernel(ident, 0.0, 1.0, 1.0, 1e-12).value - b23) < 1e-14);
}

TEST_CASE("integrate_kernel parameter errors") {
    auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate_kernel(one, 0.6, 1.0, 0.5), ParameterError);
    CHECK_THROWS_AS(integrate_kernel(one, 0.5, 1.0, 0.5), ParameterError);
    CHECK_THROWS_AS(integrate_kernel(one, 0.0, 1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(integrate_kernel(one, 0.0, 1.0, 1.5), ParameterError);
}
