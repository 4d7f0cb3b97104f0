#include "doctest.h"

#include "hydromoments/errors.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/specfun/gamma.hpp"

#include <cmath>

using namespace hydro;
using namespace hydro::hydrogenic;
using specfun::Rational;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }
}  // namespace

TEST_CASE("derive_params examples") {
    auto p = derive_params({1, 0, 3, 1});
    CHECK(p.eta == 1.0);
    CHECK(p.grandL == 0.0);
    CHECK(p.k == 0);
    CHECK(p.nu == 1.0);
    p = derive_params({2, 0, 50, 1});
    CHECK(p.eta == 25.5);
    CHECK(p.grandL == 23.5);
    CHECK(p.k == 1);
    CHECK(p.nu == 24.5);
    p = derive_params({3, 2, 3, 1});
    CHECK(p.eta == 3.0);
    CHECK(p.grandL == 2.0);
    CHECK(p.k == 0);
    CHECK(p.nu == 3.0);
    CHECK_THROWS_AS(derive_params({2, 2, 3, 1}), ValidationError);
    CHECK_THROWS_AS(derive_params({1, 0, 1, 1}), ValidationError);
    CHECK_THROWS_AS(derive_params({1, 0, 3, -1}), ValidationError);
}

TEST_CASE("energy") {
    CHECK(energy({1, 0, 3, 1}) == -0.5);
    CHECK(energy({2, 0, 3, 1}) == -0.125);
    CHECK(energy({1, 0, 5, 1}) == -0.125);
}

TEST_CASE("radial densities") {
    CHECK(rel(radial_density_position({1, 0, 3, 1}, 1.0), 4 * std::exp(-2.0)) < 1e-14);
    CHECK(rel(radial_density_position({1, 0, 3, 1}, 0.3), 4 * std::exp(-0.6)) < 1e-14);
    CHECK(rel(radial_density_momentum({1, 0, 3, 1}, 0.7), 32 / (M_PI * std::pow(1 + 0.49, 4))) < 1e-14);
    // Log-space evaluation survives where the normalization constant underflows.
    CHECK(std::isfinite(log_radial_density_position({2, 1, 400, 1}, 40000.0)));
    CHECK(std::isfinite(log_radial_density_momentum({2, 1, 400, 1}, 0.01)));
}

TEST_CASE("position_expectation examples") {
    CHECK(position_expectation({3, 1, 17, 2.5}, 0).value == 1.0);
    CHECK(rel(position_expectation({2, 0, 50, 1}, 1).value, 687.5) < 1e-14);
    CHECK(rel(position_expectation({1, 0, 3, 1}, 1).value, 1.5) < 1e-14);
    auto ev = position_expectation({2, 0, 50, 1}, 1, Precision::rational);
    REQUIRE(ev.exact);
    CHECK(*ev.exact == Rational(1375, 2));
    CHECK_THROWS_AS(position_expectation({1, 0, 3, 1}, -3), ValidationError);
}

TEST_CASE("position_closed_forms examples") {
    CHECK(rel(position_closed_forms({2, 0, 50, 1}, -1).value, 1 / (25.5 * 25.5)) < 1e-15);
    CHECK(rel(position_closed_forms({1, 0, 3, 1}, 2).value, 3.0) < 1e-15);
    CHECK(rel(position_closed_forms({1, 0, 3, 1}, -2).value, 2.0) < 1e-15);
    CHECK_THROWS_AS(position_closed_forms({1, 0, 4, 1}, -4), ValidationError);  // L = 1/2
    CHECK_THROWS_AS(position_closed_forms({2, 1, 3, 1}, 3), ValidationError);
}

TEST_CASE("log_position_expectation") {
    CHECK(rel(log_position_expectation({1, 0, 3, 1}).value, 0.2296371545) < 1e-9);
    for (int D : {2, 3, 7, 40, 1000}) {
        const double ground = specfun::digamma(D) + std::log(D - 1.0) - 2 * std::log(2.0);
        CHECK(std::fabs(log_position_expectation({1, 0, D, 1}).value - ground) < 1e-12);
    }
    CHECK(std::fabs(log_position_expectation({1, 0, 3, 2}).value -
                    (log_position_expectation({1, 0, 3, 1}).value - std::log(2.0))) < 1e-14);
}

TEST_CASE("momentum_expectation examples") {
    CHECK(momentum_expectation({4, 1, 9, 3}, 0).value == 1.0);
    CHECK(rel(momentum_expectation({2, 0, 50, 1}, 2).value, 1 / (25.5 * 25.5)) < 1e-14);
    CHECK(rel(momentum_expectation({2, 0, 50, 1}, 1).value, 0.03807886513) < 1e-9);
    CHECK_THROWS_AS(momentum_expectation({1, 0, 3, 1}, 5), ValidationError);
    CHECK_THROWS_AS(momentum_expectation({1, 0, 3, 1}, -3), ValidationError);
}

TEST_CASE("momentum closed forms and reflection") {
    CHECK(rel(momentum_closed_forms({1, 0, 3, 1}, -2).value, 5.0) < 1e-15);
    CHECK(rel(momentum_closed_forms({1, 0, 3, 1}, 4).value, 5.0) < 1e-15);
    for (int n = 1; n <= 4; ++n)
        for (int D : {3, 8, 31}) {
            HydrogenicState s{n, 0, D, 1.7};
            CHECK(rel(momentum_closed_forms(s, 2).value, -2 * energy(s)) < 1e-14);
        }
    CHECK_THROWS_AS(momentum_closed_forms({1, 0, 4, 1}, 6), ValidationError);  // 2L-1 = 0
}

TEST_CASE("log_momentum_expectation") {
    CHECK(rel(log_momentum_expectation({1, 0, 3, 1}).value, -1.0 / 3.0) < 1e-14);
    CHECK(rel(log_momentum_expectation({2, 0, 3, 1}).value, -std::log(2.0) + 4.0 / 15.0 - 1) < 1e-14);
    for (int D : {3, 5, 60}) {
        const double ground = -std::log(D - 1.0) + std::log(2.0) - 1.0 / D + std::log(3.0);
        CHECK(std::fabs(log_momentum_expectation({1, 0, D, 3}).value - ground) < 1e-13);
    }
    CHECK_THROWS_AS(log_momentum_expectation({1, 0, 2, 1}), ValidationError);
}

TEST_CASE("normalization over a large state grid") {
    for (int n = 1; n <= 8; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {2, 3, 4, 7, 20, 99, 500}) {
                HydrogenicState s{n, l, D, 1};
                CHECK(std::fabs(position_expectation(s, 0).value - 1) < 1e-13);
                CHECK(std::fabs(momentum_expectation(s, 0).value - 1) < 1e-13);
                // alpha near zero exercises the full formula rather than the shortcut
                CHECK(std::fabs(position_expectation(s, 1e-9).value - 1) < 1e-7);
            }
}

TEST_CASE("position formula matches closed forms") {
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {2, 3, 5, 10, 50, 201})
                for (int a : {-4, -3, -2, -1, 1, 2}) {
                    HydrogenicState s{n, l, D, 1.3};
                    double closed;
                    try {
                        closed = position_closed_forms(s, a).value;
                    } catch (const ValidationError&) {
                        continue;
                    }
                    CHECK(rel(position_expectation(s, a).value, closed) < 1e-12);
                }
}

TEST_CASE("momentum formula matches closed forms, reflection holds") {
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {2, 3, 5, 10, 50, 201}) {
                HydrogenicState s{n, l, D, 0.8};
                for (int a : {-2, 2, 4, 6}) {
                    double closed;
                    try {
                        closed = momentum_closed_forms(s, a).value;
                    } catch (const ValidationError&) {
                        continue;
                    }
                    CHECK(rel(momentum_expectation(s, a).value, closed) < 1e-11);
                }
                for (int beta = 0; beta <= 3; ++beta) {
                    if (beta >= D + 2 * l) continue;
                    CHECK(momentum_reflection(s, beta) < 1e-11);
                }
            }
}

TEST_CASE("r2 p2 product is exact in rational mode") {
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l < n; ++l)
            for (int D = 2; D <= 30; D += 3) {
                HydrogenicState s{n, l, D, 1};
                const auto r2 = position_expectation(s, 2, Precision::rational);
                const auto p2 = momentum_expectation(s, 2, Precision::rational);
                const Rational eta = exact_eta(s), L = exact_grand_l(s);
                CHECK(*r2.exact * *p2.exact == (5 * eta * eta + 1 - 3 * L * (L + 1)) / 2);
            }
}

TEST_CASE("Z scaling") {
    for (int n = 1; n <= 4; ++n)
        for (int D : {3, 12, 80})
            for (double a : {-1.5, -1.0, 0.5, 2.0, 3.0}) {
                HydrogenicState one{n, 0, D, 1}, z{n, 0, D, 3.7};
                CHECK(rel(position_expectation(z, a).value, std::pow(3.7, -a) * position_expectation(one, a).value) < 1e-13);
                CHECK(rel(momentum_expectation(z, a).value, std::pow(3.7, a) * momentum_expectation(one, a).value) < 1e-13);
            }
}

TEST_CASE("p6 entry agrees with the 5F4 route") {
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {5, 6, 9, 30}) {
                HydrogenicState s{n, l, D, 1};
                const auto exact = momentum_expectation(s, 6, Precision::rational);
                CHECK(rel(momentum_closed_forms(s, 6).value, exact.value) < 1e-12);
            }
}
