#include "doctest.h"

#include "hydromoments/errors.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/oracle.hpp"

#include <cmath>
#include <random>

using namespace hydro;
using namespace hydro::oracle;
using specfun::Rational;

namespace {
double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }
}  // namespace

TEST_CASE("quadrature oracle examples") {
    auto r0 = quad_position_moment({3, 1, 10, 1}, Selector::power(0));
    CHECK(r0.converged);
    CHECK(std::fabs(r0.value - 1) < 1e-12);
    CHECK(rel(quad_position_moment({2, 0, 50, 1}, Selector::power(1)).value, 687.5) < 1e-7);
    CHECK(rel(quad_position_moment({1, 0, 3, 1}, Selector::logarithm()).value, 0.2296371545) < 1e-9);
    CHECK(std::fabs(quad_momentum_moment({3, 1, 10, 1}, Selector::power(0)).value - 1) < 1e-12);
    CHECK(rel(quad_momentum_moment({2, 0, 50, 1}, Selector::power(1)).value, 0.0380789) < 5e-6);
    CHECK(rel(quad_momentum_moment({1, 0, 3, 1}, Selector::power(-2)).value, 5.0) < 1e-10);
    CHECK(rel(quad_momentum_moment({2, 0, 3, 1}, Selector::logarithm()).value,
              -std::log(2.0) + 4.0 / 15.0 - 1) < 1e-9);
}

TEST_CASE("oracle agrees with the exact module on the acceptance grid") {
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {3, 10, 50, 200})
                for (double a : {-3.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0}) {
                    HydrogenicState s{n, l, D, 1};
                    if (a > -D - 2 * l) {
                        const auto q = quad_position_moment(s, Selector::power(a));
                        CHECK(q.converged);
                        CHECK(q.nodeCount <= 20000);
                        CHECK(rel(q.value, hydrogenic::position_expectation(s, a).value) < 1e-9);
                    }
                    if (a > -D - 2 * l && a < D + 2 * l + 2) {
                        const auto q = quad_momentum_moment(s, Selector::power(a));
                        CHECK(q.converged);
                        CHECK(q.nodeCount <= 20000);
                        CHECK(rel(q.value, hydrogenic::momentum_expectation(s, a).value) < 1e-9);
                    }
                }
}

TEST_CASE("log moments against the exact module") {
    for (int n = 1; n <= 4; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {3, 10, 50}) {
                HydrogenicState s{n, l, D, 1.5};
                CHECK(std::fabs(quad_position_moment(s, Selector::logarithm()).value -
                                hydrogenic::log_position_expectation(s).value) < 1e-9);
                CHECK(std::fabs(quad_momentum_moment(s, Selector::logarithm()).value -
                                hydrogenic::log_momentum_expectation(s).value) < 1e-9);
            }
}

TEST_CASE("rational replay examples") {
    CHECK(rational_replay(Expression::positionMoment, {2, 0, 50, 1}, 1) == Rational(1375, 2));
    CHECK(replay_fk_direct(1, 10, 0) == Rational(1, 22));
    for (unsigned k = 0; k <= 8; ++k) CHECK(replay_fk_direct(k, Rational(21, 2), 3) == replay_fk_prop1(k, Rational(21, 2), 3));
    CHECK(replay_momentum_moment({1, 0, 3, 1}, -2) == 5);
    CHECK_THROWS_AS(replay_position_moment({1, 0, 3, 1}, Rational(1, 2)), ValidationError);
    CHECK_THROWS_AS(replay_momentum_moment({1, 0, 3, 1}, 1), ValidationError);
    CHECK_THROWS_AS(replay_position_moment({1, 0, 3, 0.1}, 1), ValidationError);
    CHECK_THROWS_AS(parse_expression("bogus"), ValidationError);
}

TEST_CASE("rational replay agrees with floating evaluation") {
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {3, 10, 50, 200}) {
                HydrogenicState s{n, l, D, 1};
                for (int a : {-3, -2, -1, 1, 2, 3})
                    if (a > -D - 2 * l)
                        CHECK(rel(replay_position_moment(s, a).get_d(),
                                  hydrogenic::position_expectation(s, a).value) < 1e-12);
                for (int a : {-2, 2})
                    if (a > -D - 2 * l && a < D + 2 * l + 2)
                        CHECK(rel(replay_momentum_moment(s, a).get_d(),
                                  hydrogenic::momentum_expectation(s, a).value) < 1e-12);
            }
}

TEST_CASE("quadrature error estimates are honest") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> nDist(1, 5), dDist(2, 120);
    std::uniform_real_distribution<double> aDist(-1.5, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = nDist(rng);
        HydrogenicState s{n, std::uniform_int_distribution<int>(0, n - 1)(rng), dDist(rng), 1};
        const Selector f = Selector::power(aDist(rng));
        const bool momentum = trial % 2 == 1;
        specfun::QuadratureOptions loose, tight;
        loose.relTol = 1e-8;
        tight.relTol = 0.5e-8;
        const auto a = momentum ? quad_momentum_moment(s, f, loose) : quad_position_moment(s, f, loose);
        const auto b = momentum ? quad_momentum_moment(s, f, tight) : quad_position_moment(s, f, tight);
        CHECK(std::fabs(a.value - b.value) <= a.errorEstimate + 4e-16 * std::fabs(a.value));
    }
}
