#include "check_util.hpp"
#include "hydromoments/entropy.hpp"
#include "hydromoments/sweep.hpp"
#include "hydromoments/uncertainty.hpp"

#include <mutex>
#include <numbers>

namespace hydro::verify {

using namespace detail;

namespace {

constexpr double kZInvariance = 1e-13;
constexpr double kLogMargin13 = 0.2890175204;  // psi(3) - 1/3 - psi(3/4) - 2 log 2, 50-digit evaluation
constexpr double kLogMarginTol = 1e-6;
constexpr double kEntropyTol = 1e-6;
constexpr double kSaturationTol = 1e-4;
constexpr double kRenyiBound = 3.9946;
constexpr double kRenyiBoundTol = 1e-3;
constexpr double kQLimitTol = 5e-4;
constexpr double kTsallisIdentityTol = 1e-10;
constexpr double kBoundLimitTol = 1e-3;
constexpr double kAsymptoticGap = 0.02;

}  // namespace

std::vector<Check> uncertainty_checks(int jobs) {
    using namespace uncertainty;
    std::vector<Check> out;
    std::vector<HydrogenicState> states;
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l)
            for (int D = 3; D <= 100; ++D) states.push_back({n, l, D, 1.0});

    std::mutex guard;
    std::size_t heisFail = 0, logFail = 0;
    Worst heisMargin, zDrift;
    double minHeis = INFINITY, minLog = INFINITY;
    sweep::parallel_for(states.size(), jobs, [&](std::size_t i) {
        const auto base = states[i];
        const auto ref = log_uncertainty_sum(base);
        std::size_t hf = 0, lf = 0;
        double mh = INFINITY, ml = INFINITY, drift = 0.0;
        for (double Z : {1.0, 2.0, 10.0}) {
            HydrogenicState s = base;
            s.Z = Z;
            for (BoundKind k : {BoundKind::kennard, BoundKind::centralRefined}) {
                const auto r = check_heisenberg_bound(s, k);
                hf += !r.satisfied;
                mh = std::min(mh, r.margin / r.bound);
            }
            for (BoundKind k : {BoundKind::logGeneral, BoundKind::logRefined}) {
                const auto r = log_uncertainty_sum(s, k);
                lf += !r.satisfied;
                ml = std::min(ml, r.margin);
            }
            drift = std::max(drift, std::fabs(log_uncertainty_sum(s).productValue - ref.productValue) /
                                        std::max(1.0, std::fabs(ref.productValue)));
        }
        std::lock_guard lock(guard);
        heisFail += hf;
        logFail += lf;
        minHeis = std::min(minHeis, mh);
        minLog = std::min(minLog, ml);
        zDrift.update(drift, describe(base));
    });
    out.push_back(holds("uncertainty.heisenberg.sweep", 6, heisFail == 0,
                        std::to_string(heisFail) + " violations, min relative margin " + num(minHeis),
                        "<r^2><p^2> >= D^2/4 and >= (D/2+l)^2 for n <= 6, D = 3..100, Z in {1, 2, 10}"));
    out.push_back(holds("uncertainty.log-sum.sweep", 6, logFail == 0,
                        std::to_string(logFail) + " violations, min margin " + num(minLog),
                        "<log r^2> + <log p^2> >= psi(D/4) + log 2 and >= psi((D+2l)/4) + log 2"));
    out.push_back(at_most("uncertainty.log-sum.charge-invariance", 6, zDrift.value, kZInvariance, "worst at " + zDrift.where));

    bool ground = true;
    for (long D = 2; D <= 100; ++D)
        ground = ground && heisenberg_r2p2_exact({1, 0, int(D), 1.0}) ==
                               specfun::makeRational(D * D, 4) * (1 + specfun::makeRational(1, D));
    out.push_back(holds("uncertainty.heisenberg.ground-state-exact", 6, ground, ground ? "equal" : "differ",
                        "<r^2><p^2> = D^2/4 (1 + 1/D) in rational arithmetic, D = 2..100"));

    const double margin = log_uncertainty_sum({1, 0, 3, 1.0}, BoundKind::logGeneral).margin;
    out.push_back(at_most("uncertainty.log-sum.margin(1,0,3,1)", 6, std::fabs(margin - kLogMargin13), kLogMarginTol,
                          "observed margin " + num(margin) + " against " + num(kLogMargin13)));

    Worst closed;
    std::size_t printedMisses = 0;
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l < n; ++l)
            for (int D : {3, 4, 11, 50}) {
                const HydrogenicState s{n, l, D, 1.0};
                closed.update(rel(log_sum_closed_form(s), log_uncertainty_sum(s).productValue), describe(s));
                printedMisses += std::fabs(log_sum_closed_form_printed(s) - log_sum_closed_form(s)) > 1e-12;
            }
    out.push_back(at_most("uncertainty.log-sum.closed-form", 0, closed.value, 1e-12, "worst at " + closed.where));
    out.push_back(holds("uncertainty.log-sum.closed-form.printed", 0, printedMisses == 0,
                        std::to_string(printedMisses) + " states differ", "agreement with the general closed form",
                        "printed digamma argument n+1+D-2 in place of n+l+D-2; agrees only at l = 1", Status::warn));

    {
        const HydrogenicState s{2, 1, 100, 1.0};
        const double general = heisenberg_product_largeD(s, 2, 2).value;
        const double printed = circular_heisenberg_product_largeD_printed(s, 2, 2).value;
        out.push_back(at_most("uncertainty.heisenberg.circular.printed", 0, rel(printed, general), 1e-12,
                              "printed circular product " + num(printed) + " against general large-D product " + num(general),
                              Status::warn));
    }
    return out;
}

std::vector<Check> entropy_checks(int jobs) {
    using namespace entropy;
    const double pi = std::numbers::pi;
    std::vector<Check> out;
    const HydrogenicState g{1, 0, 3, 1.0};

    // Criterion 7.
    const double S = entropy_quadrature(g, Kind::shannon, 1.0, Space::position).value;
    out.push_back(at_most("entropy.shannon(1,0,3,1)", 7, std::fabs(S - 4.1447299), kEntropyTol,
                          "observed " + num(S) + ", 3 + log pi = " + num(3 + std::log(pi))));
    const auto b2 = bound_shannon_upper(g, 2.0, Space::position);
    out.push_back(holds("entropy.shannon-bound.alpha=2", 7,
                        b2.satisfied.value_or(false) && std::fabs(b2.boundValue - 4.2568155996) <= kEntropyTol,
                        "bound " + num(b2.boundValue) + " vs entropy " + num(S),
                        "bound = 4.2568155996 +- 1e-6 and satisfied"));
    const auto b1 = bound_shannon_upper(g, 1.0, Space::position);
    out.push_back(holds("entropy.shannon-bound.alpha=1.saturated", 7,
                        b1.satisfied.value_or(false) && b1.boundValue - S <= kSaturationTol,
                        "bound - entropy = " + num(b1.boundValue - S), "satisfied and within " + num(kSaturationTol)));
    const auto r2 = bound_renyi_upper(g, 2.0, 2.0, +1, Space::position);
    out.push_back(holds("entropy.renyi-bound.q=2", 7,
                        r2.satisfied.value_or(false) && std::fabs(r2.entropy->value - 3.2241714) <= kEntropyTol &&
                            std::fabs(r2.boundValue - kRenyiBound) <= kRenyiBoundTol,
                        "R2 " + num(r2.entropy->value) + ", bound " + num(r2.boundValue),
                        "R2 = 3.2241714 +- 1e-6, bound = 3.9946 +- 1e-3, satisfied"));
    const auto t2 = bound_tsallis_lower(g, 2.0, 2.0, +1, Space::position);
    out.push_back(holds("entropy.tsallis-bound.q=2", 7,
                        t2.satisfied.value_or(false) && std::fabs(*t2.momentValue - 0.0397887) <= kEntropyTol &&
                            std::fabs(*t2.momentBound - 0.0184152) <= kEntropyTol && *t2.momentValue >= *t2.momentBound,
                        "W2 " + num(*t2.momentValue) + " >= " + num(*t2.momentBound),
                        "W2 = 0.0397887 +- 1e-6 >= 0.0184152 +- 1e-6"));
    {
        const bool mirror = bound_shannon_upper(g, 2.0, Space::momentum).satisfied.value_or(false) &&
                            bound_renyi_upper(g, 2.0, 2.0, +1, Space::momentum).satisfied.value_or(false) &&
                            bound_tsallis_lower(g, 2.0, 2.0, +1, Space::momentum).satisfied.value_or(false);
        const auto tp = bound_tsallis_lower(g, 2.0, 2.0, +1, Space::momentum);
        out.push_back(holds("entropy.momentum-mirror", 7, mirror, "W2 " + num(*tp.momentValue) + " >= " + num(*tp.momentBound),
                            "Shannon, Renyi and Tsallis bounds hold in momentum space"));
    }

    // Sweep invariants.
    struct Cell {
        HydrogenicState s;
        Space space;
    };
    std::vector<Cell> cells;
    for (int n = 1; n <= 3; ++n)
        for (int D : {3, 5, 10, 20})
            for (double Z : {1.0, 2.0})
                for (Space sp : {Space::position, Space::momentum}) cells.push_back({{n, 0, D, Z}, sp});
    std::mutex guard;
    std::size_t violations = 0, bounds = 0;
    Worst qLimit, tsallisId, boundLimit;
    double minMargin = INFINITY;
    sweep::parallel_for(cells.size(), jobs, [&](std::size_t i) {
        const auto& c = cells[i];
        const std::string at = describe(c.s) + " " + std::string(to_string(c.space));
        std::size_t v = 0, b = 0;
        double mm = INFINITY;
        auto record = [&](const BoundReport& r) {
            ++b;
            if (!r.satisfied.value_or(false)) ++v;
            mm = std::min(mm, r.boundValue - r.entropy->value);
        };
        for (double alpha : {1.0, 2.0, 3.0}) {
            record(bound_shannon_upper(c.s, alpha, c.space));
            for (double q : {0.9, 1.5, 2.0, 3.0})
                for (int sign : {+1, -1}) {
                    const int D = c.s.D;
                    if (sign < 0 && !(q > 1.0 && alpha < D * (q - 1.0) / q)) continue;
                    if (q < 1.0 && !(q > D / (D + alpha))) continue;
                    if (sign < 0 && c.space == Space::position && alpha >= D) continue;
                    record(bound_renyi_upper(c.s, q, alpha, sign, c.space));
                    record(bound_tsallis_lower(c.s, q, alpha, sign, c.space));
                }
        }
        const double sh = entropy_quadrature(c.s, Kind::shannon, 1.0, c.space).value;
        double ql = 0.0, ti = 0.0, bl = 0.0;
        for (double q : {1.0 - 1e-4, 1.0 + 1e-4})
            ql = std::max(ql, std::fabs(entropy_quadrature(c.s, Kind::renyi, q, c.space).value - sh));
        for (double q : {0.5, 2.0, 3.0}) {
            const double r = entropy_quadrature(c.s, Kind::renyi, q, c.space).value;
            const double t = entropy_quadrature(c.s, Kind::tsallis, q, c.space).value;
            ti = std::max(ti, rel(t, -std::expm1((1 - q) * r) / (q - 1)));
        }
        const double shBound = bound_shannon_upper(c.s, 2.0, c.space).boundValue;
        for (double q : {1.0 - 1e-4, 1.0 + 1e-4})
            bl = std::max(bl, rel(bound_renyi_upper(c.s, q, 2.0, +1, c.space).boundValue, shBound));
        std::lock_guard lock(guard);
        violations += v;
        bounds += b;
        minMargin = std::min(minMargin, mm);
        qLimit.update(ql, at);
        tsallisId.update(ti, at);
        boundLimit.update(bl, at);
    });
    out.push_back(holds("entropy.bounds.sweep", 0, violations == 0,
                        std::to_string(violations) + " of " + std::to_string(bounds) + " violated, min margin " + num(minMargin),
                        "every applicable bound holds for n <= 3, D in {3, 5, 10, 20}, Z in {1, 2}"));
    out.push_back(at_most("entropy.renyi.q-to-1", 0, qLimit.value, kQLimitTol,
                          "gap is (q-1) Var(log rho)/2 to first order; worst at " + qLimit.where));
    out.push_back(at_most("entropy.tsallis-renyi.identity", 0, tsallisId.value, kTsallisIdentityTol,
                          "worst at " + tsallisId.where));
    out.push_back(at_most("entropy.renyi-bound.q-to-1", 0, boundLimit.value, kBoundLimitTol, "worst at " + boundLimit.where));

    // Large-D assembled bounds.
    const HydrogenicState big{1, 0, 1000, 1.0};
    const auto terms = asymptotic_bound_terms(big, 2.0, 2.0);
    const double exactBound = bound_shannon_upper(big, 2.0, Space::position).boundValue;
    out.push_back(at_most("entropy.asymptotic.shannon.assembled", 0, rel(terms.shannonAssembled, exactBound), kAsymptoticGap,
                          "asymptotic A0 route at " + describe(big)));
    out.push_back(at_most("entropy.asymptotic.shannon.printed", 0, rel(terms.shannonPrinted, exactBound), kAsymptoticGap,
                          "printed leading term 3D log D; the exact bound grows like (3/2) D log D", Status::warn));
    bool settles = true;
    double lastGap = 0.0;
    for (double alpha : {0.5, 1.0, 3.0}) {
        std::vector<double> gaps;
        for (int D : {200, 400, 800, 1600, 3200}) {
            const auto t = asymptotic_bound_terms({1, 0, D, 1.0}, alpha, 1.0);
            gaps.push_back(t.a0Exact - t.a0Asymptotic);
        }
        for (std::size_t i = 2; i < gaps.size(); ++i)
            settles = settles && std::fabs(gaps[i] - gaps[i - 1]) <= 0.6 * std::fabs(gaps[i - 1] - gaps[i - 2]) + 1e-12;
        lastGap = std::max(lastGap, std::fabs(gaps.back()));
    }
    out.push_back(holds("entropy.asymptotic.A0-settles", 0, settles, "largest gap at D = 3200: " + num(lastGap),
                        "increments shrink over D = 200..3200 for alpha in {0.5, 1, 3}"));
    return out;
}

}  // namespace hydro::verify
