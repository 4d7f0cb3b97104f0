#include "doctest.h"

#include "hydromoments/errors.hpp"
#include "hydromoments/specfun/gamma.hpp"
#include "hydromoments/uncertainty.hpp"

#include <cmath>
#include <vector>

using namespace hydro;
using namespace hydro::uncertainty;
using specfun::Rational;

TEST_CASE("exact Heisenberg products") {
    CHECK(heisenberg_product_exact({1, 0, 3, 1.0}, 2, 2).value == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(heisenberg_product_exact({2, 0, 50, 1.0}, 2, 2).value == doctest::Approx(762.5).epsilon(1e-14));
    CHECK(heisenberg_r2p2_closed_form({2, 0, 50, 1.0}) == doctest::Approx(762.5).epsilon(1e-15));
    CHECK(heisenberg_product_exact({4, 2, 9, 3.0}, 0, 0).value == 1.0);
    // Independent closed form (5 eta^2 + 1 - 3L(L+1))/2 for <r^2><p^2>.
    const double eta = 2 + 47 / 2.0, L = 47 / 2.0;
    CHECK(heisenberg_product_exact({2, 0, 50, 1.0}, 2, 2).value == doctest::Approx((5 * eta * eta + 1 - 3 * L * (L + 1)) / 2));
}

TEST_CASE("closed-form r^2 p^2 equals the exact product in rational arithmetic") {
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l)
            for (int D = 3; D <= 60; ++D) {
                const HydrogenicState s{n, l, D, 1.0};
                CHECK(heisenberg_r2p2_exact(s) == heisenberg_r2p2_closed_form_exact(s));
            }
    for (int D : {3, 10, 57}) {
        Rational expected = specfun::makeRational(long(D) * D, 4) * (1 + specfun::makeRational(1, D));
        CHECK(heisenberg_r2p2_exact({1, 0, D, 1.0}) == expected);
    }
}

TEST_CASE("large-D Heisenberg products") {
    for (int D : {10, 100, 1000}) {
        CHECK(heisenberg_product_largeD({1, 0, D, 1.0}, 2, 2).value == doctest::Approx(D * D / 4.0).epsilon(1e-14));
        // At alpha = 0 the position factors do not cancel: (1 + (4l-2)/(2D))(1 + 2k/D).
        CHECK(heisenberg_product_largeD({3, 1, D, 2.0}, 0, 0).value ==
              doctest::Approx((1 + 2.0 / (2 * D)) * (1 + 2.0 / D)).epsilon(1e-14));
    }
    CHECK(heisenberg_product_largeD({2, 1, 100, 1.0}, 2, 2).value == doctest::Approx(2650.0).epsilon(1e-14));
    // Circular states follow 1 + 6(n-1)/D for alpha = beta = 2.
    for (int n : {1, 2, 5})
        CHECK(heisenberg_product_largeD({n, n - 1, 300, 1.0}, 2, 2).value ==
              doctest::Approx(300.0 * 300 / 4 * (1 + 6.0 * (n - 1) / 300)).epsilon(1e-14));
}

TEST_CASE("printed circular Heisenberg product departs from the general form") {
    CHECK(circular_heisenberg_product_largeD_printed({2, 1, 100, 1.0}, 2, 2).value == doctest::Approx(2575.0));
    // Without alpha in the first correction it misses even the ground-state value D^2/4.
    CHECK(circular_heisenberg_product_largeD_printed({1, 0, 100, 1.0}, 2, 2).value == doctest::Approx(2425.0));
    CHECK(heisenberg_product_largeD({1, 0, 100, 1.0}, 2, 2).value == doctest::Approx(2500.0));
    CHECK_THROWS_AS(circular_heisenberg_product_largeD_printed({3, 1, 100, 1.0}, 2, 2), ValidationError);
}

TEST_CASE("Heisenberg bound records") {
    const auto r = check_heisenberg_bound({1, 0, 3, 1.0});
    CHECK(r.productValue == doctest::Approx(3.0));
    CHECK(r.bound == 2.25);
    CHECK(r.margin == doctest::Approx(0.75));
    CHECK(r.satisfied);
    CHECK(r.boundKind == BoundKind::centralRefined);
    for (int D : {3, 8, 40, 99}) {
        const auto k = check_heisenberg_bound({1, 0, D, 1.0}, BoundKind::kennard);
        CHECK(k.margin == doctest::Approx(D / 4.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(check_heisenberg_bound({1, 0, 3, 1.0}, BoundKind::logGeneral), ValidationError);
    CHECK_FALSE(make_record(1.0, 1.0 + 1e-9, BoundKind::kennard).satisfied);
    CHECK(make_record(1.0, 1.0 + 1e-13, BoundKind::kennard).satisfied);
}

TEST_CASE("all four bounds hold on the sweep and are charge independent") {
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l)
            for (int D = 3; D <= 100; ++D) {
                const auto ref = check_heisenberg_bound({n, l, D, 1.0});
                const auto logRef = log_uncertainty_sum({n, l, D, 1.0});
                for (double Z : {1.0, 2.0, 10.0}) {
                    const HydrogenicState s{n, l, D, Z};
                    const auto a = check_heisenberg_bound(s, BoundKind::kennard);
                    const auto b = check_heisenberg_bound(s, BoundKind::centralRefined);
                    const auto c = log_uncertainty_sum(s, BoundKind::logGeneral);
                    const auto d = log_uncertainty_sum(s, BoundKind::logRefined);
                    CHECK(a.satisfied);
                    CHECK(b.satisfied);
                    CHECK(c.satisfied);
                    CHECK(d.satisfied);
                    CHECK(std::fabs(b.productValue - ref.productValue) <= 1e-13 * ref.productValue);
                    CHECK(std::fabs(d.productValue - logRef.productValue) <= 1e-13 * std::max(1.0, std::fabs(logRef.productValue)));
                }
            }
}

TEST_CASE("log uncertainty sum values") {
    const auto r = log_uncertainty_sum({1, 0, 3, 1.0}, BoundKind::logGeneral);
    // psi(3/4) + log 2 = -gamma - 3 log 2 + pi/2 + log 2.
    CHECK(r.bound == doctest::Approx(-0.5772156649015329 - 2 * std::log(2.0) + M_PI / 2).epsilon(1e-14));
    CHECK(r.bound == doctest::Approx(-0.3927136992).epsilon(1e-9));
    // psi(3) - log 2 - 1/3 from the component formulas.
    CHECK(r.productValue == doctest::Approx(1.5 - 0.5772156649015329 - std::log(2.0) - 1.0 / 3).epsilon(1e-13));
    CHECK(r.margin == doctest::Approx(0.2890175204).epsilon(1e-9));
    CHECK(std::fabs(log_uncertainty_sum({1, 0, 3, 1.0}).productValue - log_uncertainty_sum({1, 0, 3, 7.0}).productValue) < 1e-13);
}

TEST_CASE("log-sum closed form") {
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {3, 4, 11, 50}) {
                const HydrogenicState s{n, l, D, 1.0};
                CHECK(log_sum_closed_form(s) == doctest::Approx(log_uncertainty_sum(s).productValue).epsilon(1e-12));
                if (l == 1) CHECK(log_sum_closed_form_printed(s) == doctest::Approx(log_sum_closed_form(s)).epsilon(1e-15));
            }
    CHECK(std::fabs(log_sum_closed_form_printed({2, 0, 5, 1.0}) - log_sum_closed_form({2, 0, 5, 1.0})) > 0.1);
}

TEST_CASE("large-D log sum") {
    for (int D : {100, 1000}) {
        CHECK(log_uncertainty_sum_largeD({1, 0, D, 1.0}).value == doctest::Approx(std::log(D / 2.0) - 1.5 / D).epsilon(1e-15));
        for (int n : {1, 3})
            CHECK(log_uncertainty_sum_largeD({n, n - 1, D, 1.0}).value ==
                  doctest::Approx(std::log(D / 2.0) + (2.0 * n - 3.5) / D).epsilon(1e-15));
    }
    for (int n = 1; n <= 4; ++n)
        for (int l = 0; l < n; ++l) {
            std::vector<double> scaled;
            for (int D : {100, 200, 400, 800, 1600}) {
                const HydrogenicState s{n, l, D, 1.0};
                scaled.push_back(std::fabs(log_uncertainty_sum(s).productValue - log_uncertainty_sum_largeD(s).value) * D * D);
            }
            // Bounded: the increments shrink geometrically (an O(1/D) residual would double each step).
            for (std::size_t i = 2; i < scaled.size(); ++i)
                CHECK(std::fabs(scaled[i] - scaled[i - 1]) <= 0.67 * std::fabs(scaled[i - 1] - scaled[i - 2]) + 1e-6);
            CHECK(scaled.back() <= 2 * scaled.front() + 1e-6);
        }
}

TEST_CASE("ground-state Heisenberg margin vanishes at first order") {
    std::vector<double> x, y;
    for (int D : {100, 200, 400, 800, 1600}) {
        const auto r = check_heisenberg_bound({1, 0, D, 1.0});
        x.push_back(std::log(double(D)));
        y.push_back(std::log(r.margin / (D * D / 4.0)));
    }
    const double slope = (y.back() - y.front()) / (x.back() - x.front());
    CHECK(std::fabs(slope + 1.0) <= 0.1);
}
