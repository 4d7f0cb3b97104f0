#include "doctest.h"

#include "hydromoments/specfun.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace hydro::specfun;
using doctest::Approx;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }
}  // namespace

TEST_CASE("log_gamma reference values") {
    CHECK(log_gamma(1.0) == Approx(0.0).epsilon(1e-15));
    CHECK(rel(log_gamma(0.5), 0.5 * std::log(std::numbers::pi)) < 1e-14);
    CHECK(rel(log_gamma(11.0), std::log(3628800.0)) < 1e-14);
    CHECK_THROWS_AS(log_gamma(0.0), hydro::ValidationError);
    CHECK_THROWS_AS(log_gamma(-1.5), hydro::ValidationError);
}

TEST_CASE("digamma reference values and recurrence") {
    const double euler = 0.57721566490153286061;
    CHECK(rel(digamma(1.0), -euler) < 1e-14);
    CHECK(rel(digamma(2.0), 1.0 - euler) < 1e-14);
    CHECK(rel(digamma(0.75), -euler - 3 * std::log(2.0) + std::numbers::pi / 2) < 1e-13);
    for (double x = 0.1; x < 1e4; x *= 1.37)
        CHECK(std::fabs(digamma(x + 1) - digamma(x) - 1.0 / x) <= 1e-12 * std::max(1.0, 1.0 / x));
    CHECK_THROWS_AS(digamma(0.0), hydro::ValidationError);
}

TEST_CASE("log_gamma_ratio stays finite at huge arguments") {
    CHECK(rel(log_gamma_ratio(51, 49), std::log(2450.0)) < 1e-15);
    const double big = log_gamma_ratio(20000.5, 19998.0);
    CHECK(rel(big, static_cast<double>(std::lgammal(20000.5L) - std::lgammal(19998.0L))) < 1e-12);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(5.0, 0).value() == 1.0);
    CHECK(pochhammer(3.0, 4).value() == Approx(360.0).epsilon(1e-14));
    CHECK(pochhammer(-2.0, 3).isZero());
    CHECK(pochhammer(-2.0, 2).value() == Approx(2.0).epsilon(1e-15));
    CHECK(pochhammer(-2.5, 4).value() == Approx(-2.5 * -1.5 * -0.5 * 0.5).epsilon(1e-14));
    Rational a(7, 2);
    for (unsigned j = 0; j < 12; ++j) CHECK(pochhammer(a, j + 1) == pochhammer(a, j) * (a + j));
}

TEST_CASE("hyp_terminating examples") {
    auto r = hyp_terminating({{-1, -2, 3}, {49, 1}, 1.0}, Precision::rational);
    REQUIRE(r.exact);
    CHECK(*r.exact == Rational(55, 49));
    CHECK(rel(hyp_terminating({{-1, -2, 3}, {49, 1}, 1.0}).value, 55.0 / 49.0) < 1e-15);
    CHECK(hyp_terminating({{0, 5, 2.5, 3, 4}, {2, 3, 1.5, 7}, 1.0}).value == 1.0);
    CHECK(hyp_terminating({{-1, 0, 2}, {3.5, 1}, 1.0}).value == 1.0);
}

TEST_CASE("hyp_terminating rejects non-terminating and singular specs") {
    CHECK_THROWS_AS(hyp_terminating({{0.5, 2}, {3}, 1.0}), hydro::ValidationError);
    CHECK_THROWS_AS(hyp_terminating({{-3, 2}, {-1}, 1.0}), hydro::ValidationError);
    CHECK_NOTHROW(hyp_terminating({{-1, 2}, {-1}, 1.0}));
    CHECK_THROWS_AS(hyp_terminating({{-2, 0.3}, {1}, 1.0}, Precision::rational), hydro::ValidationError);
}

TEST_CASE("floating and rational modes agree on random terminating specs") {
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<int> kDist(0, 50), halfDist(-2000, 20000);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = kDist(rng);
        HypSpec spec{{double(-k), halfDist(rng) / 2.0 + 0.25, halfDist(rng) / 2.0},
                     {std::fabs(halfDist(rng) / 2.0) + 1.5, 1.0 + (trial % 7)},
                     1.0};
        const auto exact = hyp_terminating(spec, Precision::rational);
        const auto automatic = hyp_terminating(spec);
        if (*exact.exact == 0) continue;
        CHECK(rel(automatic.value, exact.value) <= 1e-12);
    }
}

TEST_CASE("ill-conditioned sums escalate to exact arithmetic") {
    // Rydberg-range kernel: k = 499 with heavy cancellation.
    HypSpec spec{{-499, -2.5, 3.5}, {2, 1}, 1.0};
    auto floating = hyp_terminating(spec, Precision::floating);
    auto automatic = hyp_terminating(spec);
    auto exact = hyp_terminating(spec, Precision::rational);
    CHECK(floating.conditionNumber > 1e3);
    CHECK(automatic.escalated);
    CHECK(automatic.value == exact.value);
}

TEST_CASE("gauss_2f1") {
    CHECK(gauss_2f1(1.3, 2.2, 3.1, 0.0) == 1.0);
    CHECK(rel(gauss_2f1(1, 1, 2, -1), std::log(2.0)) < 1e-13);
    for (double x : {-3.0, -0.5, 0.2, 0.7}) CHECK(rel(gauss_2f1(-1, 1.5, 3, x), 1 - x / 2) < 1e-14);
    for (double z : {-0.3, -5.0, -80.0, 0.5, 0.9})
        CHECK(rel(gauss_2f1(1, 1, 2, z), -std::log1p(-z) / z) < 1e-10);
    CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 1.5, 1.2), hydro::ValidationError);
}

TEST_CASE("appell_f1 reductions") {
    CHECK(appell_f1(1.2, 0.3, 0.7, 2.5, 0, 0) == 1.0);
    CHECK(rel(appell_f1(1.5, 1, 1, 3, 0.3, 0.3), gauss_2f1(1.5, 2, 3, 0.3)) < 1e-12);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> par(0.1, 3.0), arg(-0.9, 0.9);
    for (int i = 0; i < 100; ++i) {
        const double a = par(rng), b = par(rng), bp = par(rng), c = a + par(rng), x = arg(rng);
        CHECK(rel(appell_f1(a, b, bp, c, x, 0.0), gauss_2f1(a, b, c, x)) < 1e-10);
        CHECK(rel(appell_f1(a, b, 0.0, c, x, arg(rng)), gauss_2f1(a, b, c, x)) < 1e-10);
    }
    // Both branches on either side of the switch-over.
    CHECK(rel(appell_f1(1.5, 0.25, 0.75, 3, 0.89, 0.89), gauss_2f1(1.5, 1.0, 3, 0.89)) < 1e-10);
    // F1(a; b, b'; c; x, x) = 2F1(a, b+b'; c; x) on the integral branch as well.
    CHECK(rel(appell_f1(1.5, 0.25, 0.75, 3, 0.97, 0.97), gauss_2f1(1.5, 1.0, 3, 0.97)) < 1e-10);
    // Boundary x = 1: F1(a; b, 0; c; 1, y) = Gauss sum Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)).
    const double gauss = std::exp(log_gamma(3) + log_gamma(1) - log_gamma(1.5) - log_gamma(2.5));
    CHECK(rel(appell_f1(1.5, 0.5, 0.0, 3, 1.0, -1.0), gauss) < 1e-10);
}

TEST_CASE("orthogonal polynomials") {
    CHECK(laguerre(0, 3.3, 7.0) == 1.0);
    CHECK(laguerre(1, 2, 1) == Approx(2.0));
    CHECK(gegenbauer(1, 2, 0.5) == Approx(2.0));
    for (double b : {0.0, 0.5, 3.0, 47.0})
        for (double x : {0.0, 0.3, 2.0, 11.0}) {
            const double l2 = 0.5 * (x * x - 2 * (b + 2) * x + (b + 1) * (b + 2));
            const double l3 = (-x * x * x + 3 * (b + 3) * x * x - 3 * (b + 2) * (b + 3) * x +
                               (b + 1) * (b + 2) * (b + 3)) / 6;
            CHECK(std::fabs(laguerre(2, b, x) - l2) <= 1e-13 * std::max(1.0, std::fabs(l2)));
            CHECK(std::fabs(laguerre(3, b, x) - l3) <= 1e-13 * std::max(1.0, std::fabs(l3)));
        }
    for (double lam : {0.5, 1.0, 2.5, 30.0})
        for (double x : {-1.0, -0.4, 0.0, 0.7, 1.0}) {
            const double c2 = 2 * lam * (lam + 1) * x * x - lam;
            const double c3 = 4.0 / 3.0 * lam * (lam + 1) * (lam + 2) * x * x * x - 2 * lam * (lam + 1) * x;
            CHECK(std::fabs(gegenbauer(2, lam, x) - c2) <= 1e-13 * std::max(1.0, std::fabs(c2)));
            CHECK(std::fabs(gegenbauer(3, lam, x) - c3) <= 1e-13 * std::max(1.0, std::fabs(c3)));
        }
}

TEST_CASE("orthonormal polynomial variants have unit norm") {
    QuadratureOptions opt;
    opt.relTol = 1e-12;
    for (unsigned n : {0u, 1u, 3u, 6u}) {
        const double beta = 2.5;
        auto f = [&](double x) {
            const LogSigned v = laguerre_orthonormal(n, beta, x);
            return std::exp(2 * v.logAbs + beta * std::log(x) - x) * (v.isZero() ? 0 : 1);
        };
        CHECK(integrate_panels(f, uniform_breaks(0, 120, 24), opt, true).value == Approx(1.0).epsilon(1e-10));
        const double lam = 1.75;
        auto g = [&](double th) {
            const LogSigned v = gegenbauer_orthonormal(n, lam, std::cos(th));
            return v.isZero() ? 0.0 : std::exp(2 * v.logAbs + 2 * lam * std::log(std::sin(th)));
        };
        CHECK(integrate_tanh_sinh(g, 0, std::numbers::pi, opt).value == Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("surface_area") {
    CHECK(rel(surface_area(3), 4 * std::numbers::pi) < 1e-14);
    CHECK(rel(surface_area(2), 2 * std::numbers::pi) < 1e-14);
    CHECK(rel(surface_area(4), 2 * std::numbers::pi * std::numbers::pi) < 1e-14);
    CHECK(std::isfinite(log_surface_area(10000)));
}

TEST_CASE("rational parsing") {
    CHECK(parseRational("1375/2") == Rational(1375, 2));
    CHECK(parseRational("-0.5") == Rational(-1, 2));
    CHECK(parseRational("2.5e1") == Rational(25));
    CHECK(toString(Rational(6, 4)) == "3/2");
    CHECK_THROWS_AS(parseRational("abc"), hydro::ValidationError);
}

TEST_CASE("quadrature reports node counts and honest errors") {
    auto r = integrate_gk([](double x) { return std::exp(-x); }, 0, 40);
    CHECK(r.converged);
    CHECK(r.nodeCount > 0);
    CHECK(rel(r.value, 1 - std::exp(-40.0)) < 1e-12);
    auto s = integrate_tanh_sinh([](double x) { return 1 / std::sqrt(x); }, 0, 1);
    CHECK(rel(s.value, 2.0) < 1e-10);
}
