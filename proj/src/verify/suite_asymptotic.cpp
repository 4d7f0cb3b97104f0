#include "check_util.hpp"
#include "hydromoments/hydrogenic.hpp"
#include "hydromoments/largedim.hpp"
#include "hydromoments/rydberg.hpp"
#include "hydromoments/sweep.hpp"
#include "hydromoments/uncertainty.hpp"
#include "hydromoments/entropy.hpp"

#include <mutex>

namespace hydro::verify {

using namespace detail;
using specfun::makeRational;
using specfun::Rational;

namespace {

constexpr double kRatioLow = 3.0;
constexpr double kRatioHigh = 5.5;
constexpr double kRydbergTol = 0.01;
constexpr double kMeasureTol = 1e-8;
constexpr double kIdentityTol = 1e-8;
constexpr double kRoundoffFloor = 1e-12;
const std::vector<int> kConvergenceDs{100, 200, 400, 800};

struct ConvergenceCell {
    int n, l;
    double alpha;
    Space space;
};

std::vector<ConvergenceCell> convergence_grid() {
    std::vector<ConvergenceCell> cells;
    for (int n = 1; n <= 3; ++n)
        for (int l = 0; l < n; ++l)
            for (double a : {-1.0, 1.0, 2.0, 3.0})
                for (Space sp : {Space::position, Space::momentum}) cells.push_back({n, l, a, sp});
    return cells;
}

std::vector<largedim::ConvergenceReport> convergence_reports(int jobs) {
    const auto grid = convergence_grid();
    std::vector<largedim::ConvergenceReport> reports(grid.size());
    sweep::parallel_for(grid.size(), jobs, [&](std::size_t i) {
        const auto& g = grid[i];
        reports[i] = largedim::convergence_order(g.n, g.l, 1.0, g.alpha, g.space, kConvergenceDs);
    });
    return reports;
}

std::string report_name(const largedim::ConvergenceReport& r) {
    return "(" + std::to_string(r.n) + "," + std::to_string(r.l) + ") alpha=" + num(r.alpha) + " " +
           std::string(to_string(r.space));
}

// Richardson fit of nu (1 - d_k(nu)) at nu, 2nu, 4nu.
double fitted_first_coefficient(unsigned k, long alpha, long nu) {
    auto c = [&](long v) { return specfun::toDouble(Rational((1 - largedim::d_sequence_exact(k, v, alpha)) * v)); };
    return (8 * c(4 * nu) - 6 * c(2 * nu) + c(nu)) / 3;
}

}  // namespace

std::vector<Check> largedim_checks(int jobs) {
    std::vector<Check> out;

    // Criterion 4.
    const auto reports = convergence_reports(jobs);
    double lo = INFINITY, hi = -INFINITY, minOrder = INFINITY;
    std::size_t nonDegenerate = 0, outside = 0;
    std::string firstOutside;
    for (const auto& r : reports) {
        if (r.degenerate) continue;
        ++nonDegenerate;
        minOrder = std::min(minOrder, r.fittedOrder);
        bool bad = false;
        for (double ratio : r.ratios) {
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            bad = bad || ratio < kRatioLow || ratio > kRatioHigh;
        }
        if (bad) {
            ++outside;
            if (firstOutside.empty()) firstOutside = report_name(r);
        }
    }
    out.push_back(holds("largedim.convergence.ratio", 4, outside == 0,
                        "ratios in [" + num(lo) + ", " + num(hi) + "], " + std::to_string(outside) + " of " +
                            std::to_string(nonDegenerate) + " cells outside",
                        "R(D)/R(2D) in [" + num(kRatioLow) + ", " + num(kRatioHigh) + "] for D = 100, 200, 400",
                        outside ? "first order in 1/D except position alpha = 1; first outside: " + firstOutside : ""));
    out.push_back(holds("largedim.convergence.at-least-first-order", 0, minOrder >= 0.9, num(minOrder),
                        ">= 0.9 fitted order on every non-degenerate cell"));

    // Criterion 5.
    bool backward = true;
    std::size_t backwardCells = 0;
    for (unsigned k = 0; k <= 8; ++k)
        for (long nu : {5L, 10L, 20L, 50L})
            for (long a = -1; a <= 3; ++a) {
                ++backwardCells;
                backward = backward && largedim::fk_direct_exact(k, nu, a) == largedim::fk_prop1_exact(k, nu, a);
            }
    out.push_back(holds("largedim.fk.direct-equals-backward-difference", 5, backward,
                        std::to_string(backwardCells) + " cells " + (backward ? "equal" : "differ"), "exact equality"));

    bool bounded = true;
    double worstGrowth = 0.0;
    for (unsigned k = 1; k <= 5; ++k)
        for (long a = -1; a <= 3; ++a) {
            std::vector<double> scaled;
            for (long nu : {50L, 100L, 200L, 400L, 800L}) {
                const double f = specfun::toDouble(largedim::fk_direct_exact(k, nu, a));
                const double lead = std::exp(std::lgamma(k + 1.0) - k * std::log(2.0 * nu));
                scaled.push_back(double(nu) * nu * std::fabs(f - largedim::fk_asymptotic(k, nu, double(a))) / lead);
            }
            for (std::size_t i = 1; i < scaled.size(); ++i) {
                worstGrowth = std::max(worstGrowth, scaled[i] / scaled[i - 1]);
                bounded = bounded && scaled[i] <= 1.2 * scaled[i - 1];
            }
            for (std::size_t i = 2; i < scaled.size(); ++i)
                bounded = bounded &&
                          std::fabs(scaled[i] - scaled[i - 1]) <= 0.67 * std::fabs(scaled[i - 1] - scaled[i - 2]) + 1e-12;
        }
    out.push_back(holds("largedim.fk.scaled-remainder-bounded", 5, bounded, "max growth per doubling " + num(worstGrowth),
                        "growth <= 1.2 and shrinking increments, nu = 50..800"));

    bool shiftIdentity = true;
    for (const Rational& a : {Rational(3), makeRational(7, 2), Rational(10)})
        for (unsigned k = 0; k <= 6; ++k)
            for (unsigned j = 0; j <= k; ++j)
                shiftIdentity = shiftIdentity &&
                                largedim::pochhammer_shift_lhs(a, j, k) == largedim::pochhammer_shift_rhs(a, j, k);
    out.push_back(holds("largedim.pochhammer-shift", 5, shiftIdentity, shiftIdentity ? "equal" : "differ", "exact equality"));

    // Supporting identities.
    bool dForms = true;
    for (unsigned j = 0; j <= 6; ++j)
        for (long a = -1; a <= 3; ++a)
            dForms = dForms && largedim::d_sequence_exact(j, makeRational(21, 2), a) ==
                                   largedim::d_sequence_pochhammer_exact(j, makeRational(21, 2), a);
    out.push_back(holds("largedim.d-sequence.forms", 0, dForms, dForms ? "equal" : "differ", "exact equality"));

    Worst firstCoeffSmall, firstCoeff;
    for (unsigned k = 1; k <= 6; ++k)
        for (long a = -1; a <= 3; ++a) {
            const double err = std::fabs(fitted_first_coefficient(k, a, 200) - k);
            firstCoeff.update(err, "k=" + std::to_string(k));
            if (k <= 2) firstCoeffSmall.update(err, "k=" + std::to_string(k));
        }
    out.push_back(at_most("largedim.d-sequence.first-coefficient.k<=2", 0, firstCoeffSmall.value, 1e-6));
    out.push_back(at_most("largedim.d-sequence.first-coefficient.k<=6", 0, firstCoeff.value, 1e-6,
                          "three-level fit at nu = 200 leaves an O(k^4/nu^3) term; worst at " + firstCoeff.where));
    return out;
}

std::vector<Check> rydberg_checks(int jobs) {
    std::vector<Check> out;

    // Criterion 9.
    Worst mass;
    for (double lambda : {0.0, 0.5, 1.0, 2.0, 10.0}) {
        const auto one = [](double) { return 1.0; };
        const std::string at = "lambda=" + num(lambda);
        mass.update(std::fabs(rydberg::integrate_measure(rydberg::equilibrium_position({lambda}), one).value - 1), at + " position");
        mass.update(std::fabs(rydberg::integrate_measure(rydberg::equilibrium_momentum({lambda}), one).value - 1), at + " momentum");
    }
    out.push_back(at_most("rydberg.measure.normalization", 9, mass.value, kMeasureTol, "worst at " + mass.where));

    Worst posIdentity, momPrinted, momDerived;
    for (double lambda : {0.5, 1.0, 2.0, 10.0})
        for (double a : {-1.0, 0.0, 1.0, 2.0}) {
            const std::string at = "lambda=" + num(lambda) + " alpha=" + num(a);
            posIdentity.update(rel(rydberg::limiting_integrals(a, {lambda}).position,
                                   rydberg::position_moment_closed_form(a, {lambda})),
                               at);
            if (a < 0) continue;
            const double integral = rydberg::momentum_moment_integral(a, {lambda});
            momPrinted.update(rel(integral, rydberg::momentum_moment_printed(a, {lambda})), at);
            momDerived.update(rel(integral, rydberg::momentum_moment_derived(a, {lambda})), at);
        }
    out.push_back(at_most("rydberg.position-moment.closed-form", 9, posIdentity.value, kIdentityTol,
                          "worst at " + posIdentity.where));
    out.push_back(at_most("rydberg.momentum-moment.printed-reduction", 9, momPrinted.value, kIdentityTol,
                          "printed Appell reduction; worst at " + momPrinted.where));
    out.push_back(at_most("rydberg.momentum-moment.derived-reduction", 0, momDerived.value, kIdentityTol,
                          "reduction with prefactor 4 xi^2 (1+xi)^(a/2-1) (1-xi)^(-a/2) and second argument "
                          "-2 xi/(1-xi); worst at " + momDerived.where));

    {
        const HydrogenicState s{400, 0, 200, 1.0};
        const auto r = rydberg::ratio_from_state(s);
        const double pos0 = rydberg::pos_rydberg_largeD(s, 0.0, r, true).value;
        const double mom0 = rydberg::mom_rydberg_largeD(s, 0.0, r, true).value;
        const double dev = std::max(std::fabs(pos0 - 1), std::fabs(mom0 - 1));
        out.push_back(at_most("rydberg.joint-limit.printed.alpha0", 9, dev, 1e-8,
                              "printed joint-limit formulas at alpha = 0 give " + num(pos0) + " (position) and " +
                                  num(mom0) + " (momentum) at " + describe(s),
                              Status::warn));
    }

    // Criterion 8.
    struct FixedCell {
        Space space;
        double alpha;
    };
    std::vector<FixedCell> cells;
    for (double a : {-1.0, 0.5, 1.0, 2.0}) cells.push_back({Space::position, a});
    for (double a : {0.5, 1.0, 1.5, 2.5}) cells.push_back({Space::momentum, a});
    const std::vector<int> ns{50, 100, 200, 500};
    std::vector<std::vector<double>> devs(cells.size(), std::vector<double>(ns.size()));
    sweep::parallel_for(cells.size() * ns.size(), jobs, [&](std::size_t idx) {
        const auto& c = cells[idx / ns.size()];
        const HydrogenicState s{ns[idx % ns.size()], 0, 3, 1.0};
        const bool pos = c.space == Space::position;
        const double exact = pos ? hydrogenic::position_expectation(s, c.alpha).value
                                 : hydrogenic::momentum_expectation(s, c.alpha).value;
        const double asym = pos ? rydberg::pos_rydberg_fixedD(s, c.alpha).value : rydberg::mom_rydberg_fixedD(s, c.alpha).value;
        double d = std::fabs(exact / asym - 1);
        if (d < kRoundoffFloor) d = 0.0;
        devs[idx / ns.size()][idx % ns.size()] = d;
    });
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool monotone = true;
        for (std::size_t j = 1; j < ns.size(); ++j) monotone = monotone && devs[i][j] <= devs[i][j - 1];
        const std::string id = "rydberg.fixed-D." + std::string(to_string(cells[i].space)) + ".alpha=" + num(cells[i].alpha);
        std::string trail;
        for (std::size_t j = 0; j < ns.size(); ++j) trail += (j ? ", " : "") + num(devs[i][j]);
        out.push_back(holds(id, 8, monotone && devs[i].back() <= kRydbergTol, "n=50..500: " + trail,
                            "monotone and <= " + num(kRydbergTol) + " at n = 500"));
    }

    {
        const HydrogenicState s{4, 1, 3, 1.0};
        const double q = 1.0 / derive_params(s).eta;
        const double gap = rydberg::mom_rydberg_fixed_nl_gap(s, 1.0).value / q;
        out.push_back(at_most("rydberg.fixed-nl-gap.reference", 0, rel(gap, 0.770982212595020013), 1e-12,
                              "30-digit reference quadrature"));
    }
    return out;
}

std::vector<Check> limit_checks(int jobs) {
    std::vector<Check> out;
    // Large-D relative residuals shrink at every doubling, degenerate cells included.
    const auto reports = convergence_reports(jobs);
    std::size_t notShrinking = 0;
    for (const auto& r : reports)
        for (std::size_t i = 1; i < r.rows.size(); ++i)
            if (r.rows[i].residual > r.rows[i - 1].residual && r.rows[i].residual > kRoundoffFloor) ++notShrinking;
    out.push_back(holds("limits.large-D.residuals-shrink", 10, notShrinking == 0,
                        std::to_string(notShrinking) + " increasing steps", "residual decreases along D = 100..800"));

    // Ground-state Heisenberg margin relative to the bound is exactly 1/D.
    Worst heis;
    for (int D : {10, 100, 1000, 10000}) {
        const auto rec = uncertainty::check_heisenberg_bound({1, 0, D, 1.0}, uncertainty::BoundKind::kennard);
        heis.update(std::fabs(rec.margin / rec.bound * D - 1), "D=" + std::to_string(D));
    }
    out.push_back(at_most("limits.heisenberg.ground-margin", 10, heis.value, 1e-9,
                          "relative margin D (product/bound - 1) = 1"));

    // Logarithmic margin of the ground state decreases with D.
    std::vector<double> margins;
    for (int D : {10, 100, 1000}) margins.push_back(uncertainty::log_uncertainty_sum({1, 0, D, 1.0}).margin);
    out.push_back(holds("limits.log-sum.margin-decreases", 10, margins[1] < margins[0] && margins[2] < margins[1],
                        num(margins[0]) + ", " + num(margins[1]) + ", " + num(margins[2]), "decreasing over D = 10, 100, 1000"));

    // The correction term of the entropic bounds vanishes.
    std::vector<double> a1;
    for (int D : {100, 1000, 10000}) a1.push_back(std::fabs(entropy::asymptotic_bound_terms({3, 1, D, 1.0}, 1.5, 1.0).a1));
    out.push_back(holds("limits.entropy.A1-vanishes", 10, a1[2] < a1[1] && a1[1] < a1[0] && a1[2] < 1e-2,
                        num(a1[0]) + ", " + num(a1[1]) + ", " + num(a1[2]), "decreasing to below 1e-2 at D = 10000"));

    // Rydberg deviations shrink like a power of n.
    std::vector<double> ryd;
    for (int n : {100, 400, 1600}) {
        const HydrogenicState s{n, 0, 3, 1.0};
        ryd.push_back(std::fabs(hydrogenic::momentum_expectation(s, 1.0).value / rydberg::mom_rydberg_fixedD(s, 1.0).value - 1));
    }
    out.push_back(holds("limits.rydberg.momentum-decay", 10, ryd[1] < ryd[0] && ryd[2] < ryd[1],
                        num(ryd[0]) + ", " + num(ryd[1]) + ", " + num(ryd[2]), "decreasing over n = 100, 400, 1600"));
    return out;
}

}  // namespace hydro::verify
